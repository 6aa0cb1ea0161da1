#pragma once

#include <span>

#include "hkens/types.hpp"

namespace hkens {

double squared_distance(const Point& a, const Point& b);
double euclidean_distance(const Point& a, const Point& b);

// Coordinate-wise arithmetic mean; input must be nonempty.
Point centroid(const std::vector<Point>& points);
Point centroid_of(const Dataset& data, std::span<const std::size_t> members);

// Sum of squared distances from the cluster's members to `center`.
double cluster_sse(const Cluster& cluster, const Dataset& data, const Point& center);

// J = sum over clusters of the SSE at each cluster's stored centroid.
double partition_objective(const Partition& partition, const Dataset& data);

// Per-point mean squared error about the members' own mean.
double mse(const Cluster& cluster, const Dataset& data);
double members_sse(const Dataset& data, std::span<const std::size_t> members);

// Recomputes the stored centroid from the member set.
void finalize_centroid(Cluster& cluster, const Dataset& data);

}  // namespace hkens
