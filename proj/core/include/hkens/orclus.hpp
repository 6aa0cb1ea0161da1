#pragma once

#include <cstddef>
#include <vector>

#include "hkens/linalg.hpp"
#include "hkens/rng.hpp"
#include "hkens/types.hpp"

namespace hkens {

// A partition together with each cluster's own low-spread subspace.
struct ProjectedClustering {
    Partition partition;
    std::vector<Basis> subspaces;  // one per cluster
    std::size_t current_k = 0;
    std::size_t current_dim = 0;
};

struct OrclusOptions {
    std::size_t k0 = 0;   // initial seed count; 0 = min(5k, n/2) clamped to [k, n]
    double alpha = 0.5;   // cluster-count decay per round
    double beta = 0.0;    // dimension decay per round; 0 = coupled to alpha
    std::size_t max_polish_iters = 100;
};

std::size_t orclus_default_k0(std::size_t k, std::size_t n);

// Dimension decay rate that reaches d in the same number of rounds as the
// cluster count reaches k under alpha.
double orclus_coupled_beta(std::size_t k0, std::size_t k, std::size_t dim, std::size_t d,
                           double alpha);

// Iterates {assign, subspace determination, merge} from (k0, D) down to
// (k, d), then keeps iterating assign/subspace steps until the partition is
// stable. Output: exactly k clusters, each with a d-dimensional basis.
ProjectedClustering orclus(const Dataset& data, std::size_t k, std::size_t d,
                           const OrclusOptions& opts, Rng& rng);

// Each point goes to the center minimizing the distance projected onto that
// center's basis (ties to the lowest index); centroids are then recomputed in
// full space. Requires one basis per center.
Partition assign_phase(const Dataset& data, const std::vector<Point>& centers,
                       const std::vector<Basis>& subspaces);

// Per-cluster least-spread basis of dimension l; singleton clusters get the
// first l canonical axes.
std::vector<Basis> subspace_determination(const Partition& partition, const Dataset& data,
                                          std::size_t l);

// Greedily merges the pair whose union has the smallest mean squared
// projected distance to the union centroid (in the union's own l-basis)
// until target_k clusters remain.
ProjectedClustering merge_phase(ProjectedClustering clustering, const Dataset& data,
                                std::size_t target_k, std::size_t l);

}  // namespace hkens
