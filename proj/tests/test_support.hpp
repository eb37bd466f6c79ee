#pragma once

// Generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the code paths it is used to check.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "versal/jordan.hpp"
#include "versal/matrix.hpp"

namespace versal::testing {

using Partition = std::vector<std::size_t>;

/// All partitions of m, parts in non-increasing order.
inline std::vector<Partition> partitions(std::size_t m) {
    std::vector<Partition> out;
    Partition current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t cap) {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t part = std::min(left, cap); part >= 1; --part) {
            current.push_back(part);
            rec(left - part, part);
            current.pop_back();
        }
    };
    rec(m, m);
    return out;
}

/// Every structure of total size 1..max_n whose eigenvalues form a
/// non-empty subset (in the given order) of `eigenvalues`.
inline std::vector<SegreStructure> all_structures(std::size_t max_n,
                                                  const std::vector<Complex>& eigenvalues) {
    std::vector<SegreStructure> out;
    const std::size_t k = eigenvalues.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Complex> chosen;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) chosen.push_back(eigenvalues[i]);

        std::vector<EigenBlocks> groups(chosen.size());
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t g, std::size_t used) {
            if (g == chosen.size()) {
                out.emplace_back(groups);
                return;
            }
            const std::size_t remaining_groups = chosen.size() - g - 1;
            for (std::size_t m = 1; used + m + remaining_groups <= max_n; ++m) {
                for (const auto& part : partitions(m)) {
                    groups[g] = {chosen[g], part};
                    rec(g + 1, used + m);
                }
            }
        };
        rec(0, 0);
    }
    return out;
}

inline Complex random_complex(std::mt19937_64& gen, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(gen);
    const double im = normal(gen);
    return scale * Complex(re, im) / std::sqrt(2.0);
}

inline ComplexMatrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (auto& z : m.entries()) z = random_complex(gen);
    return m;
}

/// Random matrix rescaled to the given Frobenius norm.
inline ComplexMatrix random_with_norm(std::mt19937_64& gen, std::size_t rows, std::size_t cols,
                                      double norm) {
    ComplexMatrix m = random_matrix(gen, rows, cols);
    double sq = 0.0;
    for (const auto& z : m.entries()) sq += std::norm(z);
    m *= norm / std::sqrt(sq);
    return m;
}

/// Real matrix with entries uniform in [lo, hi].
inline ComplexMatrix random_uniform(std::mt19937_64& gen, std::size_t rows, std::size_t cols,
                                    double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    ComplexMatrix m(rows, cols);
    for (auto& z : m.entries()) z = u(gen);
    return m;
}

inline double norm_f(const ComplexMatrix& m) {
    double sq = 0.0;
    for (const auto& z : m.entries()) sq += std::norm(z);
    return std::sqrt(sq);
}

// Polynomials in x as coefficient vectors, constant term first.
using Poly = std::vector<Complex>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void poly_add(Poly& acc, const Poly& p, Complex sign) {
    if (acc.size() < p.size()) acc.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += sign * p[i];
}

/// det of a matrix of polynomials by cofactor expansion along row 0.
inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly out{0.0};
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        poly_add(out, poly_mul(m[0][c], poly_det(minor)), (c % 2 == 0) ? 1.0 : -1.0);
    }
    return out;
}

/// Coefficients c_0..c_k of det(xI - a) by Laplace expansion (c_k == 1).
inline Poly charpoly_bruteforce(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j) ? Poly{-a(i, j), 1.0} : Poly{-a(i, j)};
    Poly p = poly_det(m);
    p.resize(n + 1);
    return p;
}

/// Random nonsingular matrix with 2-norm condition number at most max_cond,
/// built as I + t G with ||t G||_2 < 1 - 2 / (max_cond + 1).
inline ComplexMatrix random_well_conditioned(std::mt19937_64& gen, std::size_t n, double max_cond) {
    ComplexMatrix g = random_matrix(gen, n, n);
    // ||G||_2 <= ||G||_F, so scaling by rho / ||G||_F bounds ||tG||_2 by rho.
    const double rho = 1.0 - 2.0 / (max_cond + 1.0);
    g *= 0.9 * rho / norm_f(g);
    return ComplexMatrix::identity(n) + g;
}

}  // namespace versal::testing
