#include "versal/codimension.hpp"

#include <string>

#include "versal/error.hpp"
#include "versal/numerics.hpp"

namespace versal {

std::size_t orbit_codim(const SegreStructure& s) {
    std::size_t codim = 0;
    for (const auto& g : s.groups())
        for (std::size_t j = 0; j < g.sizes.size(); ++j) codim += (2 * j + 1) * g.sizes[j];
    return codim;
}

std::size_t bundle_codim(const SegreStructure& s) {
    return orbit_codim(s) - s.distinct_eigenvalues();
}

std::size_t orbit_dimension(const SegreStructure& s) {
    return s.size() * s.size() - orbit_codim(s);
}

std::size_t bundle_dimension(const SegreStructure& s) {
    return s.size() * s.size() - bundle_codim(s);
}

std::size_t orbit_codim_oracle(const SegreStructure& s, double rank_tol) {
    const std::size_t n = s.size();
    if (n > kMaxOracleSize) {
        throw DimensionMismatch("orbit_codim_oracle: size " + std::to_string(n) +
                                " exceeds limit " + std::to_string(kMaxOracleSize));
    }
    const ComplexMatrix a = build_jcf(s);
    // Row (r, c) of the map holds the coefficients of (XA - AX)(r, c) in the
    // unknowns X(i, j), unknown index i * n + j.
    ComplexMatrix map(n * n, n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t eq = r * n + c;
            for (std::size_t k = 0; k < n; ++k) {
                map(eq, r * n + k) += a(k, c);
                map(eq, k * n + c) -= a(r, k);
            }
        }
    }
    return n * n - numerical_rank(map, rank_tol);
}

}  // namespace versal
