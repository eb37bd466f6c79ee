#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "versal/matrix.hpp"

namespace versal {

/// P(x) = x^d I + A_{d-1} x^{d-1} + ... + A_0 with n x n coefficients.
class MonicPolynomial {
public:
    /// coefficients[j] is A_j, j = 0..d-1; all must be n x n.
    explicit MonicPolynomial(std::vector<ComplexMatrix> coefficients);

    std::size_t degree() const noexcept { return coefficients_.size(); }
    std::size_t coeff_size() const noexcept { return coefficients_.front().rows(); }
    const std::vector<ComplexMatrix>& coefficients() const noexcept { return coefficients_; }
    const ComplexMatrix& coefficient(std::size_t j) const { return coefficients_.at(j); }

    friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

private:
    std::vector<ComplexMatrix> coefficients_;
};

/// Block companion linearization: first block row (-A_{d-1}, ..., -A_0),
/// identity blocks on the first block subdiagonal.
ComplexMatrix companion(const MonicPolynomial& p);

struct StructuredSplit {
    ComplexMatrix structured;    // first block row, zeros below
    ComplexMatrix unstructured;  // block rows 2..d, zeros in the first
};

/// Throws DimensionMismatch unless m is (d n) x (d n).
StructuredSplit split(const ComplexMatrix& m, std::size_t d, std::size_t n);

/// Polynomial whose companion matrix is companion(p) + g, where g is
/// supported on the first block row (anything below it is ignored).
MonicPolynomial apply_structured(const MonicPolynomial& p, const ComplexMatrix& g);

/// Snapshot handed to RecoveryOptions::on_iteration after each accepted
/// step.
struct IterationState {
    std::size_t iteration;           // 1-based count of completed steps
    const ComplexMatrix& perturbation;  // E_{i+1}
    const ComplexMatrix& transform;     // S_{i+1}
    double unstructured_norm;           // ||E_{i+1}^u||_F
};

struct RecoveryOptions {
    double tol = 1e-12;
    std::size_t max_iter = 50;
    /// Relative singular value cutoff of the least-squares step.
    double rank_tol = 1e-12;
    /// Output check: ||S^-1 (C_P + E_1) S - C_{P+F}||_F must not exceed
    /// similarity_tol * max(1, ||C_P + E_1||_F).
    double similarity_tol = 1e-10;
    /// Consecutive non-decreasing steps that count as stagnation.
    std::size_t stagnation_window = 3;
    std::function<void(const IterationState&)> on_iteration;
};

struct RecoveryResult {
    MonicPolynomial recovered;
    ComplexMatrix transform;
    std::size_t iterations;
    /// ||E_i^u||_F for i = 1..iterations+1, the last entry at or below tol.
    std::vector<double> residual_trace;
    /// ||S^-1 (C_P + E_1) S - companion(recovered)||_F.
    double similarity_residual;
};

inline constexpr std::size_t kMaxLinearizationSize = 16;

/// Finds a structured perturbation F and a similarity S with
/// S^-1 (C_P + e1) S = C_{P+F} by repeatedly eliminating the unstructured
/// part of the perturbation with a minimum-norm Sylvester-type step.
///
/// Throws MaxIterationsExceeded, SingularTransform, StagnationDetected or
/// SimilarityCheckFailed; each carries the trace computed so far.
RecoveryResult recover(const MonicPolynomial& p, const ComplexMatrix& e1,
                       const RecoveryOptions& options = {});

}  // namespace versal
