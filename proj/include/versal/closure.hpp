#pragma once

#include <vector>

#include "versal/deformation.hpp"
#include "versal/jordan.hpp"

namespace versal {

enum class ClosureMode { Orbit, Bundle };

enum class ClosureReason { SameStructure, CodimPasses, CodimBlocks };

/// Outcome of the codimension test. possible == true only means the test
/// does not rule the relation out.
struct ClosureVerdict {
    bool possible;
    ClosureReason reason;
    std::size_t source_codim;
    std::size_t target_codim;
};

/// Necessary condition for target lying in the closure of source: either
/// the two coincide (up to eigenvalue values in Bundle mode) or target has
/// strictly larger codimension. Throws SizeMismatch if sizes differ.
ClosureVerdict closure_necessary(const SegreStructure& source, const SegreStructure& target,
                                 ClosureMode mode);

/// Jordan structure of build_jcf(s) perturbed by the Arnold deformation
/// with the given parameter values.
SegreStructure perturbation_experiment(const SegreStructure& s, const ParameterValues& values,
                                       double cluster_tol = kDefaultClusterTol,
                                       double rank_tol = kDefaultStructureRankTol);

struct TransportResult {
    SegreStructure perturbed_b;  // structure of B + D
    SegreStructure perturbed_a;  // structure of A + D
    /// Partition multisets of the two sides coincide.
    bool agree;
};

/// Applies one Arnold deformation D to B = build_jcf(b) and to the matrix A
/// of the same bundle whose i-th eigenvalue group is moved to a_eigs[i],
/// and recovers both perturbed structures.
///
/// Throws EigenvalueCollision if a_eigs are not pairwise distinct or if
/// recovered eigenvalue clusters mix different groups on either side.
TransportResult transport_perturbation(const SegreStructure& b, const std::vector<Complex>& a_eigs,
                                       const ParameterValues& values,
                                       double cluster_tol = kDefaultClusterTol,
                                       double rank_tol = kDefaultStructureRankTol);

}  // namespace versal
