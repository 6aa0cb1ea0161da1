#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hkens {

using Point = std::vector<double>;

// Immutable after ingestion; all coordinates finite.
struct Dataset {
    std::vector<Point> points;
    std::size_t dim = 0;
    std::vector<std::string> labels;  // empty when no ground truth is known
    std::string name;

    std::size_t size() const { return points.size(); }
    bool has_labels() const { return !labels.empty(); }

    // Throws DataError if empty, ragged, non-finite, or label count is off.
    void validate() const;
};

struct Cluster {
    std::vector<std::size_t> members;  // sorted point indices, never empty
    Point centroid;

    std::size_t size() const { return members.size(); }
};

// Exhaustive, disjoint assignment of point indices to clusters.
struct Partition {
    std::vector<Cluster> clusters;
    std::size_t n_points = 0;

    std::size_t k() const { return clusters.size(); }

    // point index -> cluster index; requires a valid partition
    std::vector<std::size_t> assignments() const;

    // Throws InternalError unless clusters disjointly cover {0..n_points-1}.
    void validate() const;
};

}  // namespace hkens
