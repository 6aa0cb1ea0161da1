#include "hkens/split_merge.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "hkens/errors.hpp"
#include "hkens/geometry.hpp"

namespace hkens {

Partition ClusterTree::leaf_partition() const {
    Partition part;
    part.n_points = n_points;
    part.clusters.reserve(leaves.size());
    for (int leaf : leaves) {
        part.clusters.push_back(nodes[static_cast<std::size_t>(leaf)].cluster);
    }
    part.validate();
    return part;
}

std::size_t ClusterTree::oversize_leaves() const {
    std::size_t count = 0;
    for (int leaf : leaves) {
        if (nodes[static_cast<std::size_t>(leaf)].oversize) {
            ++count;
        }
    }
    return count;
}

void ClusterTree::validate() const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const TreeNode& node = nodes[i];
        if ((node.left == -1) != (node.right == -1)) {
            throw InternalError("tree node " + std::to_string(i) + " has one child");
        }
        if (node.left != -1) {
            const auto& l = nodes[static_cast<std::size_t>(node.left)].cluster.members;
            const auto& r = nodes[static_cast<std::size_t>(node.right)].cluster.members;
            std::vector<std::size_t> merged;
            std::merge(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(merged));
            if (merged != node.cluster.members) {
                throw InternalError("tree node " + std::to_string(i) +
                                    " is not the disjoint union of its children");
            }
        }
    }
    leaf_partition();  // throws unless the leaves cover the dataset
}

ClusterTree split_pass(const EnsembleMember& member, const Dataset& data, std::size_t threshold,
                       const KMeansOptions& opts) {
    if (threshold < 2) {
        throw ConfigError("split threshold must be at least 2");
    }
    member.partition.validate();

    ClusterTree tree;
    tree.n_points = data.size();

    std::vector<int> pending;
    for (const Cluster& cl : member.partition.clusters) {
        TreeNode node;
        node.cluster = cl;
        tree.nodes.push_back(std::move(node));
        const int id = static_cast<int>(tree.nodes.size()) - 1;
        tree.roots.push_back(id);
        pending.push_back(id);
    }

    while (!pending.empty()) {
        const int id = pending.back();
        pending.pop_back();
        Cluster& cl = tree.nodes[static_cast<std::size_t>(id)].cluster;
        if (cl.size() <= threshold) {
            tree.leaves.push_back(id);
            continue;
        }
        auto halves = bisect_cluster(data, cl.members, opts);
        if (!halves) {
            // identical points cannot move apart; keep the oversize leaf
            tree.nodes[static_cast<std::size_t>(id)].oversize = true;
            tree.leaves.push_back(id);
            continue;
        }
        TreeNode left;
        left.cluster = std::move(halves->first);
        left.parent = id;
        TreeNode right;
        right.cluster = std::move(halves->second);
        right.parent = id;
        tree.nodes.push_back(std::move(left));
        const int left_id = static_cast<int>(tree.nodes.size()) - 1;
        tree.nodes.push_back(std::move(right));
        const int right_id = static_cast<int>(tree.nodes.size()) - 1;
        tree.nodes[static_cast<std::size_t>(id)].left = left_id;
        tree.nodes[static_cast<std::size_t>(id)].right = right_id;
        // children first keeps leaf order deterministic
        pending.push_back(right_id);
        pending.push_back(left_id);
    }

    std::sort(tree.leaves.begin(), tree.leaves.end(), [&](int a, int b) {
        return tree.nodes[static_cast<std::size_t>(a)].cluster.members.front() <
               tree.nodes[static_cast<std::size_t>(b)].cluster.members.front();
    });
    tree.validate();
    return tree;
}

namespace {

struct ActiveCluster {
    std::size_t id = 0;   // unique within one merge run; unions get fresh ids
    int anchor = -1;      // lowest tree node containing all members; -1 = whole dataset
    Cluster cluster;
    double sse = 0.0;     // at the cluster's own centroid
};

int lowest_common_ancestor(const ClusterTree& tree, int a, int b) {
    if (a == -1 || b == -1) {
        return -1;
    }
    std::set<int> seen;
    for (int x = a; x != -1; x = tree.nodes[static_cast<std::size_t>(x)].parent) {
        seen.insert(x);
    }
    for (int y = b; y != -1; y = tree.nodes[static_cast<std::size_t>(y)].parent) {
        if (seen.count(y)) {
            return y;
        }
    }
    return -1;  // different roots: the synthetic whole-dataset ancestor
}

}  // namespace

Partition merge_pass(const ClusterTree& tree, const Dataset& data, MergeStats* stats) {
    tree.validate();

    // MSE of every tree node, plus the whole dataset for cross-root pairs
    std::vector<double> node_mse(tree.nodes.size(), 0.0);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        node_mse[i] = mse(tree.nodes[i].cluster, data);
    }
    std::vector<std::size_t> everything(data.size());
    for (std::size_t i = 0; i < everything.size(); ++i) {
        everything[i] = i;
    }
    const double root_mse =
        members_sse(data, everything) / static_cast<double>(data.size());

    std::vector<ActiveCluster> active;
    std::size_t next_id = 0;
    for (int leaf : tree.leaves) {
        ActiveCluster ac;
        ac.id = next_id++;
        ac.anchor = leaf;
        ac.cluster = tree.nodes[static_cast<std::size_t>(leaf)].cluster;
        ac.sse = cluster_sse(ac.cluster, data, ac.cluster.centroid);
        active.push_back(std::move(ac));
    }

    std::set<std::pair<std::size_t, std::size_t>> blocked;
    MergeStats local;

    while (active.size() > 1) {
        // closest unblocked pair by centroid distance; ties to the lowest ids
        std::size_t best_i = active.size();
        std::size_t best_j = active.size();
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < active.size(); ++i) {
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                const auto key = std::minmax(active[i].id, active[j].id);
                if (blocked.count(key)) {
                    continue;
                }
                const double d2 =
                    squared_distance(active[i].cluster.centroid, active[j].cluster.centroid);
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_i == active.size()) {
            break;  // every remaining pair is blocked
        }

        ActiveCluster& a = active[best_i];
        ActiveCluster& b = active[best_j];
        ++local.proposed;

        Cluster candidate;
        std::merge(a.cluster.members.begin(), a.cluster.members.end(), b.cluster.members.begin(),
                   b.cluster.members.end(), std::back_inserter(candidate.members));
        finalize_centroid(candidate, data);
        const double candidate_sse = cluster_sse(candidate, data, candidate.centroid);
        const double candidate_mse =
            candidate_sse / static_cast<double>(candidate.members.size());

        const int ref_node = lowest_common_ancestor(tree, a.anchor, b.anchor);
        const double ref_mse =
            ref_node == -1 ? root_mse : node_mse[static_cast<std::size_t>(ref_node)];

        // pooled per-point MSE of the pair as it stands
        const double pooled_mse =
            (a.sse + b.sse) / static_cast<double>(a.cluster.size() + b.cluster.size());

        const bool tighter_than_reference = candidate_mse <= ref_mse;
        const bool centroids_close = best_d2 <= 9.0 * pooled_mse;

        if (tighter_than_reference && centroids_close) {
            ActiveCluster merged;
            merged.id = next_id++;
            merged.anchor = ref_node;
            merged.cluster = std::move(candidate);
            merged.sse = candidate_sse;
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_j));
            active[best_i] = std::move(merged);
            ++local.accepted;
        } else {
            blocked.insert(std::minmax(a.id, b.id));
            ++local.rejected;
        }
    }

    std::sort(active.begin(), active.end(), [](const ActiveCluster& x, const ActiveCluster& y) {
        return x.cluster.members.front() < y.cluster.members.front();
    });

    Partition out;
    out.n_points = data.size();
    out.clusters.reserve(active.size());
    for (ActiveCluster& ac : active) {
        out.clusters.push_back(std::move(ac.cluster));
    }
    out.validate();
    if (stats != nullptr) {
        *stats = local;
    }
    return out;
}

Partition consensus_select(const std::vector<Partition>& finals, const Dataset& data,
                           ConsensusMode mode) {
    if (finals.empty()) {
        throw ConfigError("consensus over an empty member list");
    }
    for (const Partition& p : finals) {
        p.validate();
        if (p.n_points != data.size()) {
            throw InternalError("member partition does not cover the dataset");
        }
    }

    if (mode == ConsensusMode::MinSse) {
        std::size_t best = 0;
        double best_objective = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < finals.size(); ++i) {
            const double objective = partition_objective(finals[i], data);
            if (objective < best_objective) {
                best_objective = objective;
                best = i;
            }
        }
        return finals[best];
    }

    // co-association: link pairs that share a cluster in more than half the
    // members, then return the connected components
    const std::size_t n = data.size();
    std::vector<std::vector<std::size_t>> assignments;
    assignments.reserve(finals.size());
    for (const Partition& p : finals) {
        assignments.push_back(p.assignments());
    }

    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) {
        parent[i] = i;
    }
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    const double half = static_cast<double>(finals.size()) / 2.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t together = 0;
            for (const auto& asg : assignments) {
                if (asg[i] == asg[j]) {
                    ++together;
                }
            }
            if (static_cast<double>(together) > half) {
                parent[find(i)] = find(j);
            }
        }
    }

    std::vector<int> component(n, -1);
    Partition out;
    out.n_points = n;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (component[root] == -1) {
            component[root] = static_cast<int>(out.clusters.size());
            out.clusters.emplace_back();
        }
        out.clusters[static_cast<std::size_t>(component[root])].members.push_back(i);
    }
    for (Cluster& cl : out.clusters) {
        finalize_centroid(cl, data);
    }
    out.validate();
    return out;
}

}  // namespace hkens
