#include "hkens/geometry.hpp"

#include <cmath>
#include <string>

#include "hkens/errors.hpp"

namespace hkens {

namespace {

void check_same_dim(const Point& a, const Point& b) {
    if (a.size() != b.size()) {
        throw InternalError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
    }
}

}  // namespace

double squared_distance(const Point& a, const Point& b) {
    check_same_dim(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

double euclidean_distance(const Point& a, const Point& b) {
    return std::sqrt(squared_distance(a, b));
}

Point centroid(const std::vector<Point>& points) {
    if (points.empty()) {
        throw InternalError("centroid of an empty point set");
    }
    Point mean(points.front().size(), 0.0);
    for (const Point& p : points) {
        check_same_dim(p, mean);
        for (std::size_t i = 0; i < p.size(); ++i) {
            mean[i] += p[i];
        }
    }
    const double inv = 1.0 / static_cast<double>(points.size());
    for (double& v : mean) {
        v *= inv;
    }
    return mean;
}

Point centroid_of(const Dataset& data, std::span<const std::size_t> members) {
    if (members.empty()) {
        throw InternalError("centroid of an empty member set");
    }
    Point mean(data.dim, 0.0);
    for (std::size_t id : members) {
        if (id >= data.size()) {
            throw InternalError("member index " + std::to_string(id) + " out of range");
        }
        const Point& p = data.points[id];
        for (std::size_t i = 0; i < data.dim; ++i) {
            mean[i] += p[i];
        }
    }
    const double inv = 1.0 / static_cast<double>(members.size());
    for (double& v : mean) {
        v *= inv;
    }
    return mean;
}

double cluster_sse(const Cluster& cluster, const Dataset& data, const Point& center) {
    if (center.size() != data.dim) {
        throw InternalError("SSE center dimension mismatch");
    }
    double sum = 0.0;
    for (std::size_t id : cluster.members) {
        if (id >= data.size()) {
            throw InternalError("member index " + std::to_string(id) + " out of range");
        }
        sum += squared_distance(data.points[id], center);
    }
    return sum;
}

double partition_objective(const Partition& partition, const Dataset& data) {
    partition.validate();
    double sum = 0.0;
    for (const Cluster& cl : partition.clusters) {
        sum += cluster_sse(cl, data, cl.centroid);
    }
    return sum;
}

double members_sse(const Dataset& data, std::span<const std::size_t> members) {
    const Point mean = centroid_of(data, members);
    double sum = 0.0;
    for (std::size_t id : members) {
        sum += squared_distance(data.points[id], mean);
    }
    return sum;
}

double mse(const Cluster& cluster, const Dataset& data) {
    if (cluster.members.empty()) {
        throw InternalError("MSE of an empty cluster");
    }
    return members_sse(data, cluster.members) / static_cast<double>(cluster.size());
}

void finalize_centroid(Cluster& cluster, const Dataset& data) {
    cluster.centroid = centroid_of(data, cluster.members);
}

}  // namespace hkens
