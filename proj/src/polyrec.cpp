#include "versal/polyrec.hpp"

#include <algorithm>
#include <string>

#include "versal/error.hpp"
#include "versal/numerics.hpp"

namespace versal {

namespace {

// Coefficient matrix of X -> (X M - M X) restricted to rows n..N-1 of the
// result. Equation (r, c) has index (r - n) * N + c, unknown X(i, j) has
// index i * N + j.
ComplexMatrix unstructured_commutator_map(const ComplexMatrix& m, std::size_t n) {
    const std::size_t big_n = m.rows();
    ComplexMatrix map((big_n - n) * big_n, big_n * big_n);
    for (std::size_t r = n; r < big_n; ++r) {
        for (std::size_t c = 0; c < big_n; ++c) {
            const std::size_t eq = (r - n) * big_n + c;
            for (std::size_t k = 0; k < big_n; ++k) {
                map(eq, r * big_n + k) += m(k, c);
                map(eq, k * big_n + c) -= m(r, k);
            }
        }
    }
    return map;
}

}  // namespace

MonicPolynomial::MonicPolynomial(std::vector<ComplexMatrix> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw DimensionMismatch("polynomial degree must be positive");
    const std::size_t n = coefficients_.front().rows();
    for (std::size_t j = 0; j < coefficients_.size(); ++j) {
        const auto& a = coefficients_[j];
        if (a.rows() != n || a.cols() != n) {
            throw DimensionMismatch("coefficient A_" + std::to_string(j) + " is " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    ", expected " + std::to_string(n) + "x" + std::to_string(n));
        }
    }
}

ComplexMatrix companion(const MonicPolynomial& p) {
    const std::size_t d = p.degree();
    const std::size_t n = p.coeff_size();
    ComplexMatrix c(d * n, d * n);
    for (std::size_t j = 0; j < d; ++j) c.set_block(0, j * n, -p.coefficient(d - 1 - j));
    for (std::size_t b = 1; b < d; ++b)
        for (std::size_t i = 0; i < n; ++i) c(b * n + i, (b - 1) * n + i) = 1.0;
    return c;
}

StructuredSplit split(const ComplexMatrix& m, std::size_t d, std::size_t n) {
    if (d == 0 || n == 0 || m.rows() != d * n || m.cols() != d * n) {
        throw DimensionMismatch("split: expected a " + std::to_string(d * n) + "x" +
                                std::to_string(d * n) + " matrix, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    StructuredSplit out{ComplexMatrix(m.rows(), m.cols()), ComplexMatrix(m.rows(), m.cols())};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ComplexMatrix& dst = r < n ? out.structured : out.unstructured;
        for (std::size_t c = 0; c < m.cols(); ++c) dst(r, c) = m(r, c);
    }
    return out;
}

MonicPolynomial apply_structured(const MonicPolynomial& p, const ComplexMatrix& g) {
    const std::size_t d = p.degree();
    const std::size_t n = p.coeff_size();
    if (g.rows() != d * n || g.cols() != d * n) {
        throw DimensionMismatch("apply_structured: perturbation has wrong size");
    }
    // Block (1, j) of the companion holds -A_{d-j}, so the coefficient
    // absorbs the perturbation with the opposite sign.
    std::vector<ComplexMatrix> coeffs = p.coefficients();
    for (std::size_t j = 0; j < d; ++j) coeffs[d - 1 - j] -= g.block(0, j * n, n, n);
    return MonicPolynomial(std::move(coeffs));
}

RecoveryResult recover(const MonicPolynomial& p, const ComplexMatrix& e1,
                       const RecoveryOptions& options) {
    const std::size_t d = p.degree();
    const std::size_t n = p.coeff_size();
    const std::size_t big_n = d * n;
    if (big_n > kMaxLinearizationSize) {
        throw DimensionMismatch("recover: linearization size " + std::to_string(big_n) +
                                " exceeds limit " + std::to_string(kMaxLinearizationSize));
    }
    if (e1.rows() != big_n || e1.cols() != big_n) {
        throw DimensionMismatch("recover: perturbation must be " + std::to_string(big_n) + "x" +
                                std::to_string(big_n));
    }

    const ComplexMatrix cp = companion(p);
    const ComplexMatrix identity = ComplexMatrix::identity(big_n);
    ComplexMatrix e = e1;
    ComplexMatrix s = identity;
    std::vector<double> trace;
    std::size_t iterations = 0;
    std::size_t non_decreasing = 0;

    while (true) {
        const StructuredSplit parts = split(e, d, n);
        const double unstructured_norm = frobenius_norm(parts.unstructured);
        if (!trace.empty()) {
            non_decreasing = unstructured_norm >= trace.back() ? non_decreasing + 1 : 0;
        }
        trace.push_back(unstructured_norm);
        if (unstructured_norm <= options.tol) break;
        if (non_decreasing >= options.stagnation_window) {
            throw StagnationDetected("recover: unstructured norm did not decrease for " +
                                         std::to_string(non_decreasing) + " iterations",
                                     trace);
        }
        if (iterations >= options.max_iter) {
            throw MaxIterationsExceeded("recover: no convergence within " +
                                            std::to_string(options.max_iter) + " iterations",
                                        trace);
        }

        // Minimum-norm X with (X M - M X)^u = -E^u, M = C_P + E^s.
        const ComplexMatrix m = cp + parts.structured;
        const ComplexMatrix map = unstructured_commutator_map(m, n);
        ComplexMatrix rhs((big_n - n) * big_n, 1);
        for (std::size_t r = n; r < big_n; ++r)
            for (std::size_t c = 0; c < big_n; ++c)
                rhs((r - n) * big_n + c, 0) = -parts.unstructured(r, c);
        const ComplexMatrix x_vec = min_norm_least_squares(map, rhs, options.rank_tol);
        ComplexMatrix x(big_n, big_n, {x_vec.entries().begin(), x_vec.entries().end()});

        // (I - X) E_{i+1} = E_i (I - X) - C_P X + X C_P
        const ComplexMatrix step = identity - x;
        const ComplexMatrix next_rhs = e * step - cp * x + x * cp;
        try {
            e = solve_linear(step, next_rhs);
        } catch (const SingularMatrix& err) {
            throw SingularTransform(std::string("recover: I - X is singular: ") + err.what(), trace);
        }
        s = s * step;
        ++iterations;

        if (options.on_iteration) {
            options.on_iteration({iterations, e, s, frobenius_norm(split(e, d, n).unstructured)});
        }
    }

    const StructuredSplit final_parts = split(e, d, n);
    MonicPolynomial recovered = apply_structured(p, final_parts.structured);

    const ComplexMatrix perturbed = cp + e1;
    const ComplexMatrix similar = [&] {
        try {
            return solve_linear(s, perturbed * s);
        } catch (const SingularMatrix& err) {
            throw SingularTransform(
                std::string("recover: accumulated transform is singular: ") + err.what(), trace);
        }
    }();
    const double residual = frobenius_norm(similar - companion(recovered));
    const double allowed = options.similarity_tol * std::max(1.0, frobenius_norm(perturbed));
    if (residual > allowed) {
        throw SimilarityCheckFailed("recover: similarity residual " + std::to_string(residual) +
                                        " exceeds " + std::to_string(allowed),
                                    trace);
    }
    return {std::move(recovered), std::move(s), iterations, std::move(trace), residual};
}

}  // namespace versal
