#include "versal/closure.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "versal/codimension.hpp"
#include "versal/error.hpp"
#include "versal/numerics.hpp"

namespace versal {

namespace {

// Every recovered cluster must sit nearest to a single group, and the
// clusters attached to each group must account for its full multiplicity.
void check_groups_separate(const SegreStructure& base, const SegreStructure& recovered,
                           const char* side) {
    std::vector<std::size_t> mass(base.groups().size(), 0);
    for (const auto& cluster : recovered.groups()) {
        std::size_t nearest = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < base.groups().size(); ++i) {
            const double d = std::abs(cluster.eigenvalue - base.groups()[i].eigenvalue);
            if (d < best) {
                best = d;
                nearest = i;
            }
        }
        mass[nearest] += cluster.multiplicity();
    }
    for (std::size_t i = 0; i < mass.size(); ++i) {
        if (mass[i] != base.groups()[i].multiplicity()) {
            throw EigenvalueCollision(std::string("transport_perturbation: perturbed eigenvalues of ") +
                                      side + " mix group " + std::to_string(i + 1) +
                                      " with another group");
        }
    }
}

}  // namespace

ClosureVerdict closure_necessary(const SegreStructure& source, const SegreStructure& target,
                                 ClosureMode mode) {
    if (source.size() != target.size()) {
        throw SizeMismatch("closure_necessary: sizes " + std::to_string(source.size()) + " and " +
                           std::to_string(target.size()) + " differ");
    }
    const bool bundle = mode == ClosureMode::Bundle;
    const std::size_t sc = bundle ? bundle_codim(source) : orbit_codim(source);
    const std::size_t tc = bundle ? bundle_codim(target) : orbit_codim(target);

    const bool same = bundle ? partition_multiset(source) == partition_multiset(target)
                             : source.sorted() == target.sorted();
    if (same) return {true, ClosureReason::SameStructure, sc, tc};
    if (tc > sc) return {true, ClosureReason::CodimPasses, sc, tc};
    return {false, ClosureReason::CodimBlocks, sc, tc};
}

SegreStructure perturbation_experiment(const SegreStructure& s, const ParameterValues& values,
                                       double cluster_tol, double rank_tol) {
    return recover_structure(instantiate(arnold_pattern(s), values), cluster_tol, rank_tol);
}

TransportResult transport_perturbation(const SegreStructure& b, const std::vector<Complex>& a_eigs,
                                       const ParameterValues& values, double cluster_tol,
                                       double rank_tol) {
    for (std::size_t i = 0; i < a_eigs.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (a_eigs[i] == a_eigs[j]) {
                throw EigenvalueCollision("transport_perturbation: eigenvalues " +
                                          std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                          " of A coincide");
            }
    const SegreStructure a = b.relabeled(a_eigs);

    // Stars are placed by partition data alone, so one pattern serves both.
    const DeformationPattern pattern = arnold_pattern(b);
    DeformationPattern pattern_a = pattern;
    pattern_a.base = a;

    const ComplexMatrix b_plus_d = instantiate(pattern, values);
    const ComplexMatrix a_plus_d = instantiate(pattern_a, values);

    // Groups closer than the clustering radius would be merged outright.
    const double radius = cluster_tol * std::max(1.0, frobenius_norm(a_plus_d));
    for (std::size_t i = 0; i < a_eigs.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(a_eigs[i] - a_eigs[j]) <= radius) {
                throw EigenvalueCollision("transport_perturbation: eigenvalues " +
                                          std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                          " of A are within the clustering radius");
            }

    auto rb = recover_structure(b_plus_d, cluster_tol, rank_tol);
    auto ra = recover_structure(a_plus_d, cluster_tol, rank_tol);
    check_groups_separate(b, rb, "B + D");
    check_groups_separate(a, ra, "A + D");

    const bool agree = partition_multiset(rb) == partition_multiset(ra);
    return {std::move(rb), std::move(ra), agree};
}

}  // namespace versal
