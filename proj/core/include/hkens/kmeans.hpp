#pragma once

#include <cstddef>
#include <vector>

#include "hkens/rng.hpp"
#include "hkens/types.hpp"

namespace hkens {

struct KMeansOptions {
    std::size_t max_iters = 100;
    double tol = 1e-6;  // relative objective improvement below which iteration stops
};

struct KMeansResult {
    Partition partition;
    std::size_t iterations = 0;
    double final_objective = 0.0;
    bool converged = false;
    std::vector<double> objective_trace;  // objective after each Lloyd iteration
};

// Lloyd iteration from the given centers: nearest-center assignment (ties to
// the lowest index), centroid update, until the assignment stabilizes, the
// relative improvement drops below tol, or max_iters. Empty clusters are
// reseeded with the farthest member of the largest cluster, so the output
// always has exactly |initial_centers| clusters.
KMeansResult kmeans(const Dataset& data, const std::vector<Point>& initial_centers,
                    const KMeansOptions& opts = {});

// k distinct data points sampled without replacement.
std::vector<Point> seed_random(const Dataset& data, std::size_t k, Rng& rng);

// Builds nonempty clusters from a raw nearest-center assignment over exactly
// k centers, applying the same empty-cluster repair as kmeans.
Partition build_partition(const Dataset& data, std::vector<std::size_t> assignment, std::size_t k);

}  // namespace hkens
