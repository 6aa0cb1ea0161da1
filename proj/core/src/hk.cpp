#include "hkens/hk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hkens/errors.hpp"
#include "hkens/geometry.hpp"

namespace hkens {

namespace {

// Dataset restricted to a member set, plus the index map back.
Dataset subset_dataset(const Dataset& data, std::span<const std::size_t> members) {
    Dataset sub;
    sub.dim = data.dim;
    sub.name = data.name;
    sub.points.reserve(members.size());
    for (std::size_t id : members) {
        sub.points.push_back(data.points[id]);
    }
    return sub;
}

bool all_points_equal(const Dataset& data, std::span<const std::size_t> members) {
    const Point& first = data.points[members.front()];
    for (std::size_t id : members) {
        if (data.points[id] != first) {
            return false;
        }
    }
    return true;
}

Point thirds_point(const Point& p, const Point& q, double t) {
    Point out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i] + t * (q[i] - p[i]);
    }
    return out;
}

// Local 2-means over `members` from explicit seeds; clusters come back with
// global point indices and full-space centroids.
std::pair<Cluster, Cluster> two_means_over(const Dataset& data,
                                           std::span<const std::size_t> members,
                                           const Point& seed_a, const Point& seed_b,
                                           const KMeansOptions& opts) {
    const Dataset sub = subset_dataset(data, members);
    const KMeansResult local = kmeans(sub, {seed_a, seed_b}, opts);

    Cluster a;
    Cluster b;
    for (std::size_t c = 0; c < 2; ++c) {
        Cluster& target = c == 0 ? a : b;
        for (std::size_t local_id : local.partition.clusters[c].members) {
            target.members.push_back(members[local_id]);
        }
        std::sort(target.members.begin(), target.members.end());
        target.centroid = local.partition.clusters[c].centroid;
    }
    return {std::move(a), std::move(b)};
}

}  // namespace

std::pair<std::size_t, std::size_t> furthest_pair(const Dataset& data,
                                                  std::span<const std::size_t> members) {
    if (members.size() < 2) {
        throw InternalError("furthest_pair needs at least two members");
    }
    std::size_t best_a = members[0];
    std::size_t best_b = members[1];
    double best_d = -1.0;
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const double d = squared_distance(data.points[members[i]], data.points[members[j]]);
            if (d > best_d) {
                best_d = d;
                best_a = members[i];
                best_b = members[j];
            }
        }
    }
    return {best_a, best_b};
}

std::optional<std::pair<Cluster, Cluster>> bisect_cluster(const Dataset& data,
                                                          std::span<const std::size_t> members,
                                                          const KMeansOptions& opts) {
    if (members.size() < 2 || all_points_equal(data, members)) {
        return std::nullopt;
    }
    const auto [pa, pb] = furthest_pair(data, members);
    const Point& p = data.points[pa];
    const Point& q = data.points[pb];
    // seeds at the thirds of the p-q segment
    const Point seed_a = thirds_point(p, q, 1.0 / 3.0);
    const Point seed_b = thirds_point(p, q, 2.0 / 3.0);
    return two_means_over(data, members, seed_a, seed_b, opts);
}

Partition divisive_step(const Partition& partition, const Dataset& data,
                        const DivisiveOptions& opts) {
    partition.validate();

    // candidate to split: largest SSE (or cardinality) among clusters with
    // at least two distinct points
    std::size_t chosen = partition.k();
    double chosen_score = -1.0;
    for (std::size_t c = 0; c < partition.k(); ++c) {
        const Cluster& cl = partition.clusters[c];
        if (cl.size() < 2 || all_points_equal(data, cl.members)) {
            continue;
        }
        const double score = opts.select == SplitSelect::LargestSse
                                 ? cluster_sse(cl, data, cl.centroid)
                                 : static_cast<double>(cl.size());
        if (score > chosen_score) {
            chosen_score = score;
            chosen = c;
        }
    }
    if (chosen == partition.k()) {
        throw DataError("no splittable cluster: every cluster is a singleton or all-duplicate");
    }

    const KMeansOptions km{opts.max_iters, opts.tol};
    const auto halves = bisect_cluster(data, partition.clusters[chosen].members, km);
    if (!halves) {
        throw InternalError("bisect_cluster failed on a splittable cluster");
    }

    std::vector<Point> centers;
    centers.reserve(partition.k() + 1);
    for (std::size_t c = 0; c < partition.k(); ++c) {
        if (c == chosen) {
            centers.push_back(halves->first.centroid);
            centers.push_back(halves->second.centroid);
        } else {
            centers.push_back(partition.clusters[c].centroid);
        }
    }

    KMeansResult polished = kmeans(data, centers, km);
    polished.partition.validate();
    return std::move(polished.partition);
}

std::vector<EnsembleMember> generate_members(const ProjectedClustering& base, const Dataset& data,
                                             std::size_t k, std::size_t ensemble_size, Rng& rng,
                                             const DivisiveOptions& opts) {
    if (ensemble_size < 1) {
        throw ConfigError("ensemble_size must be at least 1");
    }
    const std::size_t k_max = k + 10;
    if (ensemble_size > k_max - 2 + 1) {
        throw ConfigError("ensemble_size exceeds the cluster counts available in [2, k+10]");
    }

    const KMeansOptions km{opts.max_iters, opts.tol};

    // 2-cluster start: seed from the two most separated base centroids when
    // available, otherwise from the dataset's own furthest pair.
    std::vector<Point> start_seeds;
    if (base.partition.k() >= 2) {
        std::size_t best_a = 0;
        std::size_t best_b = 1;
        double best_d = -1.0;
        for (std::size_t i = 0; i + 1 < base.partition.k(); ++i) {
            for (std::size_t j = i + 1; j < base.partition.k(); ++j) {
                const double d = squared_distance(base.partition.clusters[i].centroid,
                                                  base.partition.clusters[j].centroid);
                if (d > best_d) {
                    best_d = d;
                    best_a = i;
                    best_b = j;
                }
            }
        }
        const Point& p = base.partition.clusters[best_a].centroid;
        const Point& q = base.partition.clusters[best_b].centroid;
        Point s1(p.size());
        Point s2(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            s1[i] = p[i] + (q[i] - p[i]) / 3.0;
            s2[i] = p[i] + 2.0 * (q[i] - p[i]) / 3.0;
        }
        start_seeds = {std::move(s1), std::move(s2)};
    } else {
        std::vector<std::size_t> all(data.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] = i;
        }
        const auto [pa, pb] = furthest_pair(data, all);
        const Point& p = data.points[pa];
        const Point& q = data.points[pb];
        Point s1(p.size());
        Point s2(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            s1[i] = p[i] + (q[i] - p[i]) / 3.0;
            s2[i] = p[i] + 2.0 * (q[i] - p[i]) / 3.0;
        }
        start_seeds = {std::move(s1), std::move(s2)};
    }

    // divisive chain: partitions for k' = 2 .. k+10, stopping early when no
    // cluster can be split further
    std::vector<Partition> chain;
    chain.push_back(kmeans(data, start_seeds, km).partition);
    while (chain.back().k() < k_max) {
        try {
            chain.push_back(divisive_step(chain.back(), data, opts));
        } catch (const DataError&) {
            break;  // unsplittable: the achievable range ends here
        }
    }

    if (chain.size() < ensemble_size) {
        throw DataError("only " + std::to_string(chain.size()) +
                        " cluster counts are achievable, fewer than ensemble_size = " +
                        std::to_string(ensemble_size));
    }

    std::vector<std::size_t> picks = rng.sample_without_replacement(chain.size(), ensemble_size);
    std::vector<EnsembleMember> members;
    members.reserve(ensemble_size);
    for (std::size_t i = 0; i < picks.size(); ++i) {
        EnsembleMember m;
        m.id = i + 1;
        m.partition = chain[picks[i]];
        m.k_value = m.partition.k();
        m.objective = partition_objective(m.partition, data);
        members.push_back(std::move(m));
    }
    return members;
}

}  // namespace hkens
