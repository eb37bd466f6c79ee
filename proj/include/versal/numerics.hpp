#pragma once

#include <vector>

#include "versal/matrix.hpp"

namespace versal {

/// Default relative rank tolerance for min_norm_least_squares.
inline constexpr double kDefaultRankTol = 1e-10;
/// Pivots below this multiple of ||a||_F make solve_linear fail.
inline constexpr double kSingularTol = 1e-14;
/// Largest matrix accepted by eigenvalues().
inline constexpr std::size_t kMaxEigenSize = 32;

double frobenius_norm(const ComplexMatrix& m);

/// Solves a x = b by row-pivoted Gaussian elimination.
/// Throws SingularMatrix when a pivot modulus drops below 1e-14 * ||a||_F.
ComplexMatrix solve_linear(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pseudoinverse solution of a x ~= b: the least-squares minimizer of
/// smallest Frobenius norm. Singular values at or below tau * sigma_max are
/// treated as zero.
ComplexMatrix min_norm_least_squares(const ComplexMatrix& a, const ComplexMatrix& b,
                                     double tau = kDefaultRankTol);

/// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Number of singular values strictly greater than tau * sigma_max.
std::size_t numerical_rank(const ComplexMatrix& m, double tau);

/// All eigenvalues with multiplicity (complex Schur form). m.rows() <= 32.
/// Throws NoConvergence after 500 * rows QR sweeps.
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

struct SchurForm {
    ComplexMatrix unitary;     // U
    ComplexMatrix triangular;  // T, with m = U T U^H
};

/// Complex Schur decomposition. Same limits and errors as eigenvalues().
SchurForm schur(const ComplexMatrix& m);

/// Moves the diagonal entries of an upper triangular t flagged in `front`
/// to its leading positions by unitary similarity (adjacent Givens swaps),
/// keeping the relative order within each part. The other entries of the
/// diagonal follow. Returns the reordered triangular matrix.
ComplexMatrix reorder_schur(ComplexMatrix t, std::vector<bool> front);

/// Largest distance between paired eigenvalues when each entry of a is
/// greedily paired with its nearest unused entry of b. Infinity if the
/// sizes differ.
double matched_spectrum_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace versal
