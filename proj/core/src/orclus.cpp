#include "hkens/orclus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hkens/errors.hpp"
#include "hkens/geometry.hpp"
#include "hkens/kmeans.hpp"
#include "hkens/parallel.hpp"

namespace hkens {

namespace {

// Mean squared projected distance of the members to their own centroid in
// the member set's least-spread l-basis.
double union_projected_energy(const Dataset& data, const std::vector<std::size_t>& members,
                              std::size_t l) {
    const Point mean = centroid_of(data, members);
    Basis basis;
    if (members.size() == 1) {
        basis = identity_basis(data.dim);
        basis.vectors.resize(l);
        basis.eigenvalues.resize(l);
        basis.dim_sub = l;
    } else {
        basis = least_spread_basis(covariance_of(data, members), l);
    }
    double sum = 0.0;
    for (std::size_t id : members) {
        sum += projected_sq_distance(data.points[id], mean, basis);
    }
    return sum / static_cast<double>(members.size());
}

std::vector<std::size_t> merged_members(const std::vector<std::size_t>& a,
                                        const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::size_t decay(std::size_t current, std::size_t target, double factor) {
    if (current <= target) {
        return target;
    }
    std::size_t next = static_cast<std::size_t>(
        std::ceil(factor * static_cast<double>(current)));
    if (next >= current) {
        next = current - 1;  // force progress for factors near 1
    }
    return std::max(next, target);
}

}  // namespace

std::size_t orclus_default_k0(std::size_t k, std::size_t n) {
    std::size_t k0 = std::min(5 * k, n / 2);
    return std::clamp(k0, k, n);
}

double orclus_coupled_beta(std::size_t k0, std::size_t k, std::size_t dim, std::size_t d,
                           double alpha) {
    if (dim <= d) {
        return 0.5;
    }
    if (k0 <= k) {
        return 0.5;
    }
    // rounds needed for k0 -> k at rate alpha
    const double rounds =
        std::ceil(std::log(static_cast<double>(k) / static_cast<double>(k0)) / std::log(alpha));
    if (rounds < 1.0) {
        return 0.5;
    }
    return std::pow(static_cast<double>(d) / static_cast<double>(dim), 1.0 / rounds);
}

Partition assign_phase(const Dataset& data, const std::vector<Point>& centers,
                       const std::vector<Basis>& subspaces) {
    if (centers.empty() || centers.size() != subspaces.size()) {
        throw InternalError("assign_phase requires one basis per center");
    }
    std::vector<std::size_t> assignment(data.size(), 0);
    parallel_for(data.size(), [&](std::size_t i) {
        const Point& p = data.points[i];
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const double d = projected_sq_distance(p, centers[c], subspaces[c]);
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        assignment[i] = best;
    });
    return build_partition(data, std::move(assignment), centers.size());
}

std::vector<Basis> subspace_determination(const Partition& partition, const Dataset& data,
                                          std::size_t l) {
    if (l > data.dim) {
        throw ConfigError("subspace dimension " + std::to_string(l) +
                          " exceeds the data dimensionality");
    }
    std::vector<Basis> bases(partition.k());
    parallel_for(partition.k(), [&](std::size_t c) {
        const Cluster& cl = partition.clusters[c];
        if (cl.size() == 1) {
            Basis b = identity_basis(data.dim);
            b.vectors.resize(l);
            b.eigenvalues.resize(l);
            b.dim_sub = l;
            bases[c] = std::move(b);
        } else {
            bases[c] = least_spread_basis(covariance_of(data, cl.members), l);
        }
    });
    return bases;
}

ProjectedClustering merge_phase(ProjectedClustering clustering, const Dataset& data,
                                std::size_t target_k, std::size_t l) {
    if (clustering.partition.k() <= target_k) {
        throw InternalError("merge_phase requires more clusters than the target");
    }
    std::vector<Cluster> active = clustering.partition.clusters;

    while (active.size() > target_k) {
        std::size_t best_i = 0;
        std::size_t best_j = 1;
        double best_energy = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < active.size(); ++i) {
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                const auto members = merged_members(active[i].members, active[j].members);
                const double energy = union_projected_energy(data, members, l);
                if (energy < best_energy) {
                    best_energy = energy;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        Cluster merged;
        merged.members = merged_members(active[best_i].members, active[best_j].members);
        finalize_centroid(merged, data);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_j));
        active[best_i] = std::move(merged);
    }

    ProjectedClustering out;
    out.partition.clusters = std::move(active);
    out.partition.n_points = data.size();
    out.partition.validate();
    out.subspaces = subspace_determination(out.partition, data, l);
    out.current_k = out.partition.k();
    out.current_dim = l;
    return out;
}

ProjectedClustering orclus(const Dataset& data, std::size_t k, std::size_t d,
                           const OrclusOptions& opts, Rng& rng) {
    data.validate();
    const std::size_t n = data.size();
    if (k < 1 || k > n) {
        throw ConfigError("orclus: k must lie in 1.." + std::to_string(n));
    }
    if (d < 1 || d > data.dim) {
        throw ConfigError("orclus: d must lie in 1.." + std::to_string(data.dim));
    }
    const std::size_t k0 = opts.k0 == 0 ? orclus_default_k0(k, n) : opts.k0;
    if (k0 < k || k0 > n) {
        throw ConfigError("orclus: k0 must lie in k..n");
    }
    if (!(opts.alpha > 0.0 && opts.alpha < 1.0)) {
        throw ConfigError("orclus: alpha must lie in (0, 1)");
    }
    const double beta = opts.beta == 0.0
                            ? orclus_coupled_beta(k0, k, data.dim, d, opts.alpha)
                            : opts.beta;
    if (!(beta > 0.0 && beta < 1.0)) {
        throw ConfigError("orclus: beta must lie in (0, 1)");
    }

    std::size_t current_k = k0;
    std::size_t current_dim = data.dim;

    std::vector<Point> centers = seed_random(data, k0, rng);
    std::vector<Basis> subspaces(k0, identity_basis(data.dim));

    ProjectedClustering state;
    std::vector<std::size_t> prev_assignment;
    std::size_t polish_iters = 0;

    while (true) {
        Partition part = assign_phase(data, centers, subspaces);
        const bool at_target = current_k == k && current_dim == d;
        const bool stable = at_target && !prev_assignment.empty() &&
                            part.assignments() == prev_assignment;

        if (at_target) {
            prev_assignment = part.assignments();
        }

        if (current_k > k || current_dim > d) {
            const std::size_t next_k = decay(current_k, k, opts.alpha);
            const std::size_t next_dim = decay(current_dim, d, beta);
            state.partition = std::move(part);
            state.subspaces = subspace_determination(state.partition, data, next_dim);
            state.current_k = current_k;
            state.current_dim = next_dim;
            if (next_k < current_k) {
                state = merge_phase(std::move(state), data, next_k, next_dim);
            }
            current_k = next_k;
            current_dim = next_dim;
        } else {
            state.partition = std::move(part);
            state.subspaces = subspace_determination(state.partition, data, d);
            state.current_k = k;
            state.current_dim = d;
            ++polish_iters;
            if (stable || polish_iters >= opts.max_polish_iters) {
                break;
            }
        }

        centers.clear();
        for (const Cluster& cl : state.partition.clusters) {
            centers.push_back(cl.centroid);
        }
        subspaces = state.subspaces;
    }

    state.partition.validate();
    return state;
}

}  // namespace hkens
