#pragma once

#include <cstddef>
#include <vector>

#include "hkens/config.hpp"
#include "hkens/hk.hpp"
#include "hkens/types.hpp"

namespace hkens {

struct TreeNode {
    Cluster cluster;
    int parent = -1;
    int left = -1;
    int right = -1;
    bool oversize = false;  // above threshold but unsplittable (all duplicates)
};

// Split hierarchy of one ensemble member: roots are the member's clusters,
// leaves are the post-split clusters.
struct ClusterTree {
    std::vector<TreeNode> nodes;
    std::vector<int> roots;
    std::vector<int> leaves;
    std::size_t n_points = 0;

    Partition leaf_partition() const;
    std::size_t oversize_leaves() const;
    void validate() const;
};

// Recursively bisects every cluster larger than `threshold` (furthest-pair
// thirds seeding, 2-means assignment). A cluster of identical points that
// cannot split is kept as an oversize leaf.
ClusterTree split_pass(const EnsembleMember& member, const Dataset& data, std::size_t threshold,
                       const KMeansOptions& opts = {});

struct MergeStats {
    std::size_t proposed = 0;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

// Greedy bottom-up merging over the split hierarchy. The closest active pair
// (centroid distance) is proposed; it is accepted when the merged cluster's
// MSE does not exceed the MSE of the pair's lowest tree ancestor (the whole
// dataset when the pair spans different roots) and the centroids sit within
// three pooled RMS deviations of each other. Rejected pairs stay blocked
// until one side changes through another merge.
Partition merge_pass(const ClusterTree& tree, const Dataset& data, MergeStats* stats = nullptr);

// Combines the per-member final partitions into one: `MinSse` returns the
// partition with the smallest objective; `CoAssociation` links point pairs
// that share a cluster in more than half the members and returns the
// connected components.
Partition consensus_select(const std::vector<Partition>& finals, const Dataset& data,
                           ConsensusMode mode);

}  // namespace hkens
