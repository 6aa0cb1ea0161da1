#pragma once

// Shared builders and independent oracles for the test suites. Oracles are
// deliberately written as plain loops, separate from the library code paths
// they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hkens/geometry.hpp"
#include "hkens/rng.hpp"
#include "hkens/types.hpp"

namespace testutil {

inline hkens::Dataset dataset_from(std::vector<hkens::Point> pts) {
    hkens::Dataset data;
    data.dim = pts.empty() ? 0 : pts.front().size();
    data.points = std::move(pts);
    data.name = "test";
    return data;
}

inline hkens::Dataset dataset_1d(const std::vector<double>& xs) {
    std::vector<hkens::Point> pts;
    pts.reserve(xs.size());
    for (double x : xs) {
        pts.push_back({x});
    }
    return dataset_from(std::move(pts));
}

inline hkens::Dataset random_dataset(hkens::Rng& rng, std::size_t n, std::size_t dim,
                                     double scale = 10.0) {
    std::vector<hkens::Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        hkens::Point p(dim);
        for (double& v : p) {
            v = (2.0 * rng.next_unit() - 1.0) * scale;
        }
        pts.push_back(std::move(p));
    }
    return dataset_from(std::move(pts));
}

inline hkens::Cluster cluster_of(const hkens::Dataset& data, std::vector<std::size_t> members) {
    hkens::Cluster cl;
    std::sort(members.begin(), members.end());
    cl.members = std::move(members);
    hkens::finalize_centroid(cl, data);
    return cl;
}

inline hkens::Partition single_cluster_partition(const hkens::Dataset& data) {
    hkens::Partition part;
    part.n_points = data.size();
    std::vector<std::size_t> all(data.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    part.clusters.push_back(cluster_of(data, std::move(all)));
    return part;
}

// ---- independent oracles ----

inline double oracle_distance(const hkens::Point& a, const hkens::Point& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(acc);
}

inline hkens::Point oracle_mean(const std::vector<hkens::Point>& pts) {
    hkens::Point acc(pts.front().size(), 0.0);
    for (const hkens::Point& p : pts) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            acc[i] += p[i];
        }
    }
    for (double& v : acc) {
        v /= static_cast<double>(pts.size());
    }
    return acc;
}

// SSE of a member subset about its own mean, recomputed from scratch.
inline double oracle_sse(const hkens::Dataset& data, const std::vector<std::size_t>& members) {
    std::vector<hkens::Point> pts;
    for (std::size_t id : members) {
        pts.push_back(data.points[id]);
    }
    const hkens::Point mean = oracle_mean(pts);
    double acc = 0.0;
    for (const hkens::Point& p : pts) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            acc += (p[i] - mean[i]) * (p[i] - mean[i]);
        }
    }
    return acc;
}

// Best 2-way split over all nonempty proper subsets (n <= ~15). Returns the
// two sides as sorted member lists, lexicographically smallest first.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> oracle_best_2split(
    const hkens::Dataset& data, const std::vector<std::size_t>& members) {
    const std::size_t n = members.size();
    double best = std::numeric_limits<double>::infinity();
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> best_split;
    // fix member 0 on side A so each bipartition is enumerated once
    for (std::size_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
        std::vector<std::size_t> a{members[0]};
        std::vector<std::size_t> b;
        for (std::size_t i = 1; i < n; ++i) {
            if (mask & (1ULL << (i - 1))) {
                a.push_back(members[i]);
            } else {
                b.push_back(members[i]);
            }
        }
        if (b.empty()) {
            continue;
        }
        const double cost = oracle_sse(data, a) + oracle_sse(data, b);
        if (cost < best) {
            best = cost;
            best_split = {a, b};
        }
    }
    if (best_split.second < best_split.first) {
        std::swap(best_split.first, best_split.second);
    }
    return best_split;
}

// Gram-Schmidt on random normal vectors; an orthonormal d-frame in dim-space.
inline std::vector<hkens::Point> random_orthonormal(hkens::Rng& rng, std::size_t dim,
                                                    std::size_t d) {
    std::vector<hkens::Point> frame;
    while (frame.size() < d) {
        hkens::Point v(dim);
        for (double& x : v) {
            x = rng.next_normal();
        }
        for (const hkens::Point& u : frame) {
            double dot = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                dot += u[i] * v[i];
            }
            for (std::size_t i = 0; i < dim; ++i) {
                v[i] -= dot * u[i];
            }
        }
        double norm = 0.0;
        for (double x : v) {
            norm += x * x;
        }
        norm = std::sqrt(norm);
        if (norm < 1e-8) {
            continue;  // degenerate draw, resample
        }
        for (double& x : v) {
            x /= norm;
        }
        frame.push_back(std::move(v));
    }
    return frame;
}

}  // namespace testutil
