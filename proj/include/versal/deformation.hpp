#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "versal/jordan.hpp"
#include "versal/matrix.hpp"

namespace versal {

enum class DeformationShape { Arnold, Alternate };

/// One possibly non-zero entry of a deformation. Indices are zero-based;
/// parameter p corresponds to delta_{p+1} in the usual numbering.
struct Star {
    std::size_t row;
    std::size_t col;
    std::size_t param;
    friend bool operator==(const Star&, const Star&) = default;
};

struct DeformationPattern {
    SegreStructure base;
    DeformationShape shape;
    std::vector<Star> stars;
    std::size_t parameter_count = 0;
};

/// Parameter values keyed by zero-based parameter index.
using ParameterValues = std::map<std::size_t, Complex>;

/// Arnold's miniversal deformation of build_jcf(s).
///
/// Inside each eigenvalue group with blocks k_1 >= ... >= k_t, the block
/// pair (p, q) carries stars on the bottom row when p <= q and on the first
/// column when p > q, min(k_p, k_q) of them, each with its own parameter.
/// Parameters are numbered in hook order: for p = 1..t, the bottom row of
/// block row p (left to right across q >= p), then the first column of
/// block column p below the diagonal block (top to bottom). Groups are
/// numbered in listed order.
DeformationPattern arnold_pattern(const SegreStructure& s);

/// Toeplitz variant: every Arnold star of block pair (p, q) is spread along
/// the whole diagonal of that block pair it lies on, keeping its
/// parameter. Same parameter count and numbering as arnold_pattern.
DeformationPattern alternate_pattern(const SegreStructure& s);

DeformationPattern make_pattern(const SegreStructure& s, DeformationShape shape);

/// build_jcf(p.base) plus every star entry increased by its parameter's
/// value. Throws MissingParameter if a parameter has no value.
ComplexMatrix instantiate(const DeformationPattern& p, const ParameterValues& values);

struct ReductionResult {
    ComplexMatrix deformed;
    ComplexMatrix transform;
};

inline constexpr double kPivotTol = 1e-8;

/// Reduces a = J_k(lambda) + E to J_k(lambda) + D with D supported on the
/// last row, by k - 1 elementary similarities that turn row p of
/// (a - lambda I) into the unit row e_{p+1}. Returns the reduced matrix
/// and the accumulated transform S with S^-1 a S = deformed.
///
/// Throws PivotBreakdown if a working superdiagonal pivot has modulus
/// below kPivotTol.
ReductionResult reduce_single_block(const ComplexMatrix& a, Complex lambda);

/// Coefficients c_0..c_{k-1} of det(xI - a) = x^k + c_{k-1}x^{k-1} + ... + c_0,
/// by the Faddeev-LeVerrier recurrence.
std::vector<Complex> characteristic_coefficients(const ComplexMatrix& a);

}  // namespace versal
