#pragma once

#include <optional>
#include <vector>

#include "minfact/perm.hpp"

namespace minfact {

enum class Shape { Interval, NearInterval, Other };

/// Set partition of a finite totally ordered ground set (a strictly
/// increasing subset of positive integers). Canonical form: blocks sorted
/// by minimum element, elements within a block increasing. The type holds
/// any set partition; noncrossingness is a predicate, enforced by the
/// operations that require it.
class NCPartition {
public:
    NCPartition() = default;
    NCPartition(std::vector<int> ground, std::vector<std::vector<int>> blocks);

    static NCPartition singletons(std::vector<int> ground);
    static NCPartition one_block(std::vector<int> ground);
    static NCPartition singletons(int n);  // 0-hat on {1..n}
    static NCPartition one_block(int n);   // 1-hat on {1..n}

    const std::vector<int>& ground() const { return ground_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int ground_size() const { return static_cast<int>(ground_.size()); }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int rank() const { return ground_size() - block_count(); }

    /// Index into blocks() of the block containing x; -1 if x not in ground.
    int block_index_of(int x) const;

    bool operator==(const NCPartition& o) const {
        return ground_ == o.ground_ && blocks_ == o.blocks_;
    }
    bool operator!=(const NCPartition& o) const { return !(*this == o); }
    bool operator<(const NCPartition& o) const {
        return ground_ != o.ground_ ? ground_ < o.ground_ : blocks_ < o.blocks_;
    }

private:
    std::vector<int> ground_;
    std::vector<std::vector<int>> blocks_;
};

bool is_noncrossing(const NCPartition& p);

/// Interval: every block contiguous in the ground's induced order.
/// NearInterval: exactly one non-contiguous block, and it is the union of a
/// nonempty prefix and a nonempty suffix of the ground (the merge of the
/// smallest and largest blocks of an interval partition with >= 3 blocks).
Shape classify_shape(const NCPartition& p);

/// Refinement order: true iff every block of p is contained in a block of q.
/// Requires equal ground sets.
bool refines(const NCPartition& p, const NCPartition& q);

/// The permutation sigma_pi whose orbits are p's blocks, each traversed in
/// increasing cyclic order, embedded into S_{ambient_n} with off-ground
/// points fixed. ambient_n = 0 means the ground's maximum.
Permutation to_permutation(const NCPartition& p, int ambient_n = 0);

/// Inverse of the geodesic embedding: if sigma lies on an id--C geodesic
/// (l(sigma) + l(C sigma^{-1}) = n-1), the partition whose blocks are
/// sigma's orbits; otherwise nullopt.
std::optional<NCPartition> from_geodesic_permutation(const Permutation& sigma);

/// q with `block` replaced by `parts`. Rejects a crossing result, a block
/// not present in q, or parts that do not partition the block.
NCPartition split_block(const NCPartition& q, const std::vector<int>& block,
                        const std::vector<std::vector<int>>& parts);

/// One way of splitting a sorted element list into k parts that form an
/// interval or near-interval partition of it.
struct BlockSplit {
    std::vector<std::vector<int>> parts;
    bool near = false;  // true: near-interval split, false: interval split
};

/// All interval and near-interval splits of `elems` into k parts, sorted by
/// the lexicographic order of their part-minimum sequences (interval splits
/// first on ties).
std::vector<BlockSplit> block_splits(const std::vector<int>& elems, int k);

/// All (rho, interval_step) with rho obtained from p by splitting one block
/// into two parts forming an interval or near-interval partition of it;
/// these are exactly the lower covers rho <. p in the noncrossing lattice.
std::vector<std::pair<NCPartition, bool>> lower_covers(const NCPartition& p);

/// All set partitions of {1..n}, by restricted-growth strings.
std::vector<NCPartition> enumerate_set_partitions(int n);

/// All noncrossing partitions of {1..n} (filtered set partitions; desk scale).
std::vector<NCPartition> enumerate_noncrossing(int n);

}  // namespace minfact
