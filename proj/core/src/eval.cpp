#include "hkens/eval.hpp"

#include <map>

#include "hkens/errors.hpp"

namespace hkens {

namespace {

void check_labels(const Partition& partition, const std::vector<std::string>& labels) {
    partition.validate();
    if (labels.empty()) {
        throw DataError("ground-truth labels are required but missing");
    }
    if (labels.size() != partition.n_points) {
        throw DataError("label count does not match the partition");
    }
}

}  // namespace

double purity(const Partition& partition, const std::vector<std::string>& labels) {
    check_labels(partition, labels);
    std::size_t hits = 0;
    for (const Cluster& cl : partition.clusters) {
        std::map<std::string, std::size_t> counts;
        for (std::size_t id : cl.members) {
            ++counts[labels[id]];
        }
        std::size_t majority = 0;
        for (const auto& [label, count] : counts) {
            majority = std::max(majority, count);
        }
        hits += majority;
    }
    return static_cast<double>(hits) / static_cast<double>(partition.n_points);
}

double rand_index(const Partition& partition, const std::vector<std::string>& labels) {
    check_labels(partition, labels);
    const std::size_t n = partition.n_points;
    if (n < 2) {
        return 1.0;
    }

    std::map<std::string, std::size_t> class_ids;
    std::vector<std::size_t> truth(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = class_ids.emplace(labels[i], class_ids.size());
        truth[i] = it->second;
    }
    const std::vector<std::size_t> mine = partition.assignments();

    // contingency counts; agreement via pair-counting identities
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cells;
    std::vector<std::size_t> row(partition.k(), 0);
    std::vector<std::size_t> col(class_ids.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        ++cells[{mine[i], truth[i]}];
        ++row[mine[i]];
        ++col[truth[i]];
    }
    auto pairs2 = [](std::size_t c) {
        return static_cast<double>(c) * static_cast<double>(c - 1) / 2.0;
    };
    double same_both = 0.0;
    for (const auto& [key, count] : cells) {
        same_both += pairs2(count);
    }
    double same_mine = 0.0;
    for (std::size_t c : row) {
        same_mine += pairs2(c);
    }
    double same_truth = 0.0;
    for (std::size_t c : col) {
        same_truth += pairs2(c);
    }
    const double total = pairs2(n);
    const double agreements = total + 2.0 * same_both - same_mine - same_truth;
    return agreements / total;
}

}  // namespace hkens
