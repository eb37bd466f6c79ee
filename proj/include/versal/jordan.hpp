#pragma once

#include <cstddef>
#include <vector>

#include "versal/matrix.hpp"

namespace versal {

/// Jordan blocks of one eigenvalue, sizes in non-increasing order.
struct EigenBlocks {
    Complex eigenvalue;
    std::vector<std::size_t> sizes;

    std::size_t multiplicity() const noexcept;
    friend bool operator==(const EigenBlocks&, const EigenBlocks&) = default;
};

/// Segre characteristic of a matrix: distinct eigenvalues, each with its
/// Jordan block sizes. Group order is significant; it fixes the block
/// order of the JCF and the numbering of deformation parameters.
class SegreStructure {
public:
    /// Throws InvalidStructure unless eigenvalues are pairwise distinct,
    /// every size list is non-empty, positive and non-increasing.
    explicit SegreStructure(std::vector<EigenBlocks> groups);

    const std::vector<EigenBlocks>& groups() const noexcept { return groups_; }
    std::size_t size() const noexcept { return size_; }
    std::size_t distinct_eigenvalues() const noexcept { return groups_.size(); }

    /// Same partitions, groups reordered lexicographically by (re, im).
    SegreStructure sorted() const;

    /// Copy with the i-th eigenvalue replaced by eigenvalues[i].
    SegreStructure relabeled(const std::vector<Complex>& eigenvalues) const;

    friend bool operator==(const SegreStructure&, const SegreStructure&) = default;

private:
    std::vector<EigenBlocks> groups_;
    std::size_t size_ = 0;
};

/// Weyr characteristic of one eigenvalue: the conjugate of its Segre
/// partition.
struct EigenWeyr {
    Complex eigenvalue;
    std::vector<std::size_t> weyr;
    friend bool operator==(const EigenWeyr&, const EigenWeyr&) = default;
};

struct WeyrStructure {
    std::vector<EigenWeyr> groups;
    friend bool operator==(const WeyrStructure&, const WeyrStructure&) = default;
};

/// Conjugate partition: out[j] = #{parts >= j + 1}. Input must be
/// non-increasing with positive parts.
std::vector<std::size_t> conjugate_partition(const std::vector<std::size_t>& parts);

WeyrStructure segre_to_weyr(const SegreStructure& s);
SegreStructure weyr_to_segre(const WeyrStructure& w);

/// Block-diagonal Jordan matrix, groups and blocks in listed order.
ComplexMatrix build_jcf(const SegreStructure& s);

inline constexpr double kDefaultClusterTol = 1e-6;
inline constexpr double kDefaultStructureRankTol = 1e-8;
inline constexpr std::size_t kMaxRecoverSize = 16;

/// Numerically recovers the Jordan structure of m.
///
/// Eigenvalues closer than cluster_tol * max(1, ||m||_F) are merged
/// (single linkage); each cluster is represented by its mean mu. The Weyr
/// characteristic of a cluster follows from the rank drop of successive
/// powers of (m - mu I). The ranks are taken on the cluster's diagonal
/// block of a reordered Schur form, which gives the same drops without
/// the other eigenvalues in the way; singular values of the j-th power
/// count when above rank_tol * max(1, ||m||_F) * max(1, ||T11 - mu I||_2)^(j-1).
/// The result is ordered lexicographically by eigenvalue.
///
/// Throws InconsistentRanks when a cluster's rank drops do not form a
/// partition of its multiplicity.
SegreStructure recover_structure(const ComplexMatrix& m, double cluster_tol = kDefaultClusterTol,
                                 double rank_tol = kDefaultStructureRankTol);

/// Multiset of partitions, eigenvalues discarded, sorted for comparison.
std::vector<std::vector<std::size_t>> partition_multiset(const SegreStructure& s);

/// Equal partitions per group in order, eigenvalues within abs_tol.
bool same_structure(const SegreStructure& a, const SegreStructure& b, double abs_tol);

}  // namespace versal
