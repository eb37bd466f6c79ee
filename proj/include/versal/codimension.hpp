#pragma once

#include <cstddef>

#include "versal/jordan.hpp"

namespace versal {

/// Codimension of the similarity orbit: the number of miniversal
/// deformation parameters, sum over eigenvalues of sum_j (2j - 1) k_j.
std::size_t orbit_codim(const SegreStructure& s);

/// Orbit codimension minus the number of distinct eigenvalues.
std::size_t bundle_codim(const SegreStructure& s);

/// n^2 - orbit_codim(s).
std::size_t orbit_dimension(const SegreStructure& s);

/// n^2 - bundle_codim(s).
std::size_t bundle_dimension(const SegreStructure& s);

inline constexpr std::size_t kMaxOracleSize = 10;

/// Dimension of the commutant {X : XA - AX = 0} of A = build_jcf(s),
/// computed as the nullity of the n^2 x n^2 commutator matrix. Independent
/// of the pattern generator; n <= 10.
std::size_t orbit_codim_oracle(const SegreStructure& s, double rank_tol = 1e-10);

}  // namespace versal
