#include "hkens/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hkens/errors.hpp"
#include "hkens/geometry.hpp"
#include "hkens/parallel.hpp"

namespace hkens {

namespace {

std::vector<std::size_t> nearest_center_assignment(const Dataset& data,
                                                   const std::vector<Point>& centers) {
    std::vector<std::size_t> assignment(data.size(), 0);
    parallel_for(data.size(), [&](std::size_t i) {
        const Point& p = data.points[i];
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const double d = squared_distance(p, centers[c]);
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        assignment[i] = best;
    });
    return assignment;
}

}  // namespace

Partition build_partition(const Dataset& data, std::vector<std::size_t> assignment,
                          std::size_t k) {
    if (k == 0) {
        throw ConfigError("cannot build a partition with zero clusters");
    }
    if (k > data.size()) {
        throw ConfigError("cannot split " + std::to_string(data.size()) + " points into " +
                          std::to_string(k) + " nonempty clusters");
    }

    Partition part;
    part.n_points = data.size();
    part.clusters.resize(k);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] >= k) {
            throw InternalError("assignment references cluster " + std::to_string(assignment[i]));
        }
        part.clusters[assignment[i]].members.push_back(i);
    }
    for (Cluster& cl : part.clusters) {
        if (!cl.members.empty()) {
            finalize_centroid(cl, data);
        }
    }

    // Reseed each empty cluster with the member of the largest cluster that
    // lies farthest from that cluster's centroid.
    for (std::size_t e = 0; e < k; ++e) {
        if (!part.clusters[e].members.empty()) {
            continue;
        }
        std::size_t donor = k;
        for (std::size_t c = 0; c < k; ++c) {
            if (part.clusters[c].size() >= 2 &&
                (donor == k || part.clusters[c].size() > part.clusters[donor].size())) {
                donor = c;
            }
        }
        if (donor == k) {
            throw InternalError("cannot repair empty cluster: no donor with 2+ members");
        }
        Cluster& from = part.clusters[donor];
        std::size_t far_pos = 0;
        double far_d = -1.0;
        for (std::size_t m = 0; m < from.members.size(); ++m) {
            const double d = squared_distance(data.points[from.members[m]], from.centroid);
            if (d > far_d) {
                far_d = d;
                far_pos = m;
            }
        }
        const std::size_t moved = from.members[far_pos];
        from.members.erase(from.members.begin() + static_cast<std::ptrdiff_t>(far_pos));
        finalize_centroid(from, data);
        part.clusters[e].members = {moved};
        part.clusters[e].centroid = data.points[moved];
    }
    return part;
}

KMeansResult kmeans(const Dataset& data, const std::vector<Point>& initial_centers,
                    const KMeansOptions& opts) {
    if (initial_centers.empty()) {
        throw ConfigError("kmeans requires at least one initial center");
    }
    if (initial_centers.size() > data.size()) {
        throw ConfigError("kmeans with " + std::to_string(initial_centers.size()) +
                          " centers on " + std::to_string(data.size()) + " points");
    }
    for (const Point& c : initial_centers) {
        if (c.size() != data.dim) {
            throw ConfigError("initial center dimensionality does not match the data");
        }
    }

    const std::size_t k = initial_centers.size();
    std::vector<Point> centers = initial_centers;
    std::vector<std::size_t> prev_assignment;

    KMeansResult result;
    double prev_objective = std::numeric_limits<double>::infinity();

    while (result.iterations < opts.max_iters) {
        std::vector<std::size_t> assignment = nearest_center_assignment(data, centers);
        if (!prev_assignment.empty() && assignment == prev_assignment) {
            result.converged = true;
            break;
        }

        Partition part = build_partition(data, assignment, k);
        const double objective = partition_objective(part, data);

        centers.clear();
        for (const Cluster& cl : part.clusters) {
            centers.push_back(cl.centroid);
        }
        prev_assignment = part.assignments();  // repair may have moved points
        result.partition = std::move(part);
        result.objective_trace.push_back(objective);
        ++result.iterations;

        if (std::isfinite(prev_objective)) {
            const double improvement = prev_objective - objective;
            const double rel = improvement / std::max(prev_objective, 1e-300);
            if (rel < opts.tol && improvement >= 0.0) {
                result.converged = true;
                prev_objective = objective;
                break;
            }
        }
        prev_objective = objective;
    }

    result.final_objective = result.objective_trace.empty() ? 0.0 : result.objective_trace.back();
    return result;
}

std::vector<Point> seed_random(const Dataset& data, std::size_t k, Rng& rng) {
    if (k == 0) {
        throw ConfigError("seed_random requires k >= 1");
    }
    if (k > data.size()) {
        throw ConfigError("seed_random: k = " + std::to_string(k) + " exceeds the " +
                          std::to_string(data.size()) + " data points");
    }
    std::vector<std::size_t> picks = rng.sample_without_replacement(data.size(), k);
    std::vector<Point> centers;
    centers.reserve(k);
    for (std::size_t id : picks) {
        centers.push_back(data.points[id]);
    }
    return centers;
}

}  // namespace hkens
