#include "hkens/types.hpp"

#include <algorithm>
#include <cmath>

#include "hkens/errors.hpp"

namespace hkens {

void Dataset::validate() const {
    if (points.empty()) {
        throw DataError("dataset '" + name + "' has no points");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim) {
            throw DataError("dataset '" + name + "': point " + std::to_string(i) +
                            " has dimension " + std::to_string(points[i].size()) +
                            ", expected " + std::to_string(dim));
        }
        for (double v : points[i]) {
            if (!std::isfinite(v)) {
                throw DataError("dataset '" + name + "': point " + std::to_string(i) +
                                " has a non-finite coordinate");
            }
        }
    }
    if (!labels.empty() && labels.size() != points.size()) {
        throw DataError("dataset '" + name + "': " + std::to_string(labels.size()) +
                        " labels for " + std::to_string(points.size()) + " points");
    }
}

std::vector<std::size_t> Partition::assignments() const {
    validate();
    std::vector<std::size_t> out(n_points, 0);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        for (std::size_t id : clusters[c].members) {
            out[id] = c;
        }
    }
    return out;
}

void Partition::validate() const {
    if (clusters.empty()) {
        throw InternalError("partition has no clusters");
    }
    std::vector<char> seen(n_points, 0);
    std::size_t covered = 0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        const Cluster& cl = clusters[c];
        if (cl.members.empty()) {
            throw InternalError("cluster " + std::to_string(c) + " is empty");
        }
        if (!std::is_sorted(cl.members.begin(), cl.members.end())) {
            throw InternalError("cluster " + std::to_string(c) + " members are not sorted");
        }
        for (std::size_t id : cl.members) {
            if (id >= n_points) {
                throw InternalError("cluster " + std::to_string(c) + " references point " +
                                    std::to_string(id) + " outside 0.." +
                                    std::to_string(n_points ? n_points - 1 : 0));
            }
            if (seen[id]) {
                throw InternalError("point " + std::to_string(id) +
                                    " belongs to more than one cluster");
            }
            seen[id] = 1;
            ++covered;
        }
    }
    if (covered != n_points) {
        throw InternalError("partition covers " + std::to_string(covered) + " of " +
                            std::to_string(n_points) + " points");
    }
}

}  // namespace hkens
