#include "versal/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "versal/error.hpp"
#include "versal/numerics.hpp"

namespace versal {

namespace {

bool lex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

bool is_partition(const std::vector<std::size_t>& parts) {
    if (parts.empty()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

std::string format_eigenvalue(const Complex& z) {
    return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

// Disjoint-set forest for single-linkage clustering.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t EigenBlocks::multiplicity() const noexcept {
    return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

SegreStructure::SegreStructure(std::vector<EigenBlocks> groups) : groups_(std::move(groups)) {
    if (groups_.empty()) throw InvalidStructure("structure has no eigenvalues");
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        const auto& g = groups_[i];
        if (!is_partition(g.sizes)) {
            throw InvalidStructure("block sizes of eigenvalue " + format_eigenvalue(g.eigenvalue) +
                                   " must be positive and non-increasing");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (groups_[j].eigenvalue == g.eigenvalue) {
                throw InvalidStructure("eigenvalue " + format_eigenvalue(g.eigenvalue) +
                                       " listed twice");
            }
        }
        size_ += g.multiplicity();
    }
}

SegreStructure SegreStructure::sorted() const {
    auto groups = groups_;
    std::stable_sort(groups.begin(), groups.end(), [](const EigenBlocks& a, const EigenBlocks& b) {
        return lex_less(a.eigenvalue, b.eigenvalue);
    });
    return SegreStructure(std::move(groups));
}

SegreStructure SegreStructure::relabeled(const std::vector<Complex>& eigenvalues) const {
    if (eigenvalues.size() != groups_.size()) {
        throw InvalidStructure("relabel needs " + std::to_string(groups_.size()) +
                               " eigenvalues, got " + std::to_string(eigenvalues.size()));
    }
    auto groups = groups_;
    for (std::size_t i = 0; i < groups.size(); ++i) groups[i].eigenvalue = eigenvalues[i];
    return SegreStructure(std::move(groups));
}

std::vector<std::size_t> conjugate_partition(const std::vector<std::size_t>& parts) {
    if (!is_partition(parts)) throw InvalidStructure("not a partition");
    std::vector<std::size_t> out(parts.front(), 0);
    for (std::size_t p : parts)
        for (std::size_t j = 0; j < p; ++j) ++out[j];
    return out;
}

WeyrStructure segre_to_weyr(const SegreStructure& s) {
    WeyrStructure w;
    for (const auto& g : s.groups()) w.groups.push_back({g.eigenvalue, conjugate_partition(g.sizes)});
    return w;
}

SegreStructure weyr_to_segre(const WeyrStructure& w) {
    std::vector<EigenBlocks> groups;
    for (const auto& g : w.groups) {
        if (!is_partition(g.weyr)) {
            throw InvalidStructure("Weyr characteristic of " + format_eigenvalue(g.eigenvalue) +
                                   " must be positive and non-increasing");
        }
        groups.push_back({g.eigenvalue, conjugate_partition(g.weyr)});
    }
    return SegreStructure(std::move(groups));
}

ComplexMatrix build_jcf(const SegreStructure& s) {
    ComplexMatrix m(s.size(), s.size());
    std::size_t offset = 0;
    for (const auto& g : s.groups()) {
        for (std::size_t k : g.sizes) {
            for (std::size_t i = 0; i < k; ++i) {
                m(offset + i, offset + i) = g.eigenvalue;
                if (i + 1 < k) m(offset + i, offset + i + 1) = 1.0;
            }
            offset += k;
        }
    }
    return m;
}

SegreStructure recover_structure(const ComplexMatrix& m, double cluster_tol, double rank_tol) {
    if (!m.is_square()) throw DimensionMismatch("recover_structure: matrix is not square");
    if (m.rows() > kMaxRecoverSize) {
        throw DimensionMismatch("recover_structure: size " + std::to_string(m.rows()) +
                                " exceeds limit " + std::to_string(kMaxRecoverSize));
    }
    const std::size_t n = m.rows();
    const SchurForm form = schur(m);
    std::vector<Complex> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = form.triangular(i, i);
    const double scale = std::max(1.0, frobenius_norm(m));
    const double radius = cluster_tol * scale;

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(eigs[i] - eigs[j]) <= radius) uf.unite(i, j);

    std::vector<std::vector<std::size_t>> clusters;
    std::vector<std::size_t> cluster_of_root(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        if (cluster_of_root[root] == n) {
            cluster_of_root[root] = clusters.size();
            clusters.emplace_back();
        }
        clusters[cluster_of_root[root]].push_back(i);
    }

    std::vector<EigenBlocks> groups;
    for (const auto& members : clusters) {
        Complex mean{};
        for (std::size_t i : members) mean += eigs[i];
        mean /= static_cast<double>(members.size());
        const std::size_t multiplicity = members.size();

        // rank((m - mu I)^j) = rank((T11 - mu I)^j) + n - a, where T11 is the
        // leading a x a block of a Schur form with this cluster ordered first.
        // Working on T11 keeps the other eigenvalues out of the rank decisions.
        std::vector<bool> front(n, false);
        for (std::size_t i : members) front[i] = true;
        const ComplexMatrix reordered = reorder_schur(form.triangular, std::move(front));
        ComplexMatrix local = reordered.block(0, 0, multiplicity, multiplicity);
        for (std::size_t i = 0; i < multiplicity; ++i) local(i, i) -= mean;

        // Roundoff in the j-th power is about u * ||m|| * ||local||^(j-1),
        // so the cutoff follows the same growth.
        const double growth = std::max(1.0, singular_values(local).front());
        double cutoff = rank_tol * scale;
        std::vector<std::size_t> weyr;
        std::size_t prev_rank = multiplicity;
        ComplexMatrix power = local;
        for (std::size_t j = 1; j <= multiplicity; ++j) {
            if (j > 1) {
                power = power * local;
                cutoff *= growth;
            }
            std::size_t rank = 0;
            for (double sigma : singular_values(power))
                if (sigma > cutoff) ++rank;
            if (rank > prev_rank) {
                throw InconsistentRanks("rank of power " + std::to_string(j) + " increased at " +
                                        format_eigenvalue(mean));
            }
            const std::size_t drop = prev_rank - rank;
            if (drop == 0) break;
            weyr.push_back(drop);
            prev_rank = rank;
        }
        const std::size_t total = std::accumulate(weyr.begin(), weyr.end(), std::size_t{0});
        if (total != multiplicity || !is_partition(weyr)) {
            throw InconsistentRanks("Weyr characteristic at " + format_eigenvalue(mean) +
                                    " sums to " + std::to_string(total) + " for a cluster of " +
                                    std::to_string(multiplicity) + " eigenvalues");
        }
        groups.push_back({mean, conjugate_partition(weyr)});
    }
    return SegreStructure(std::move(groups)).sorted();
}

std::vector<std::vector<std::size_t>> partition_multiset(const SegreStructure& s) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& g : s.groups()) out.push_back(g.sizes);
    std::sort(out.begin(), out.end());
    return out;
}

bool same_structure(const SegreStructure& a, const SegreStructure& b, double abs_tol) {
    if (a.groups().size() != b.groups().size()) return false;
    for (std::size_t i = 0; i < a.groups().size(); ++i) {
        const auto& ga = a.groups()[i];
        const auto& gb = b.groups()[i];
        if (ga.sizes != gb.sizes) return false;
        if (std::abs(ga.eigenvalue - gb.eigenvalue) > abs_tol) return false;
    }
    return true;
}

}  // namespace versal
