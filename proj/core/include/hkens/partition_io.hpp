#pragma once

#include <filesystem>

#include "hkens/types.hpp"

namespace hkens {

// Plain text: a "k=<k>,n=<N>" header line, then one "point_index,cluster_id"
// line per point in index order.
void write_partition(const Partition& partition, const std::filesystem::path& path);

// Reloads and validates the structure; centroids stay empty.
Partition read_partition(const std::filesystem::path& path);

// Reloads and recomputes centroids from the dataset.
Partition read_partition(const std::filesystem::path& path, const Dataset& data);

}  // namespace hkens
