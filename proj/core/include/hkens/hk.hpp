#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hkens/config.hpp"
#include "hkens/kmeans.hpp"
#include "hkens/orclus.hpp"
#include "hkens/rng.hpp"
#include "hkens/types.hpp"

namespace hkens {

struct EnsembleMember {
    std::size_t id = 0;       // 1-based position in the ensemble
    std::size_t k_value = 0;  // cluster count of this member
    Partition partition;
    double objective = 0.0;
};

struct DivisiveOptions {
    SplitSelect select = SplitSelect::LargestSse;
    std::size_t max_iters = 100;
    double tol = 1e-6;
};

// Indices of the two mutually farthest members (ties to the smallest index
// pair). Requires at least two members.
std::pair<std::size_t, std::size_t> furthest_pair(const Dataset& data,
                                                  std::span<const std::size_t> members);

// 2-means over a member set, seeded at the thirds of the segment between the
// furthest pair. Returns nullopt when all members coincide.
std::optional<std::pair<Cluster, Cluster>> bisect_cluster(const Dataset& data,
                                                          std::span<const std::size_t> members,
                                                          const KMeansOptions& opts = {});

// Splits the chosen cluster in two (furthest-pair thirds seeding, local
// 2-means), then polishes the whole dataset with k-means started from the
// resulting k+1 centroids. Throws DataError when no cluster can be split.
Partition divisive_step(const Partition& partition, const Dataset& data,
                        const DivisiveOptions& opts = {});

// Builds the divisive chain for every cluster count in [2, k+10] (the
// 2-cluster start seeds from the two most separated base centroids) and
// returns ensemble_size members at distinct cluster counts drawn uniformly
// without replacement.
std::vector<EnsembleMember> generate_members(const ProjectedClustering& base, const Dataset& data,
                                             std::size_t k, std::size_t ensemble_size, Rng& rng,
                                             const DivisiveOptions& opts = {});

}  // namespace hkens
