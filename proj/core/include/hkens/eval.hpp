#pragma once

#include <string>
#include <vector>

#include "hkens/types.hpp"

namespace hkens {

// Fraction of points covered by each cluster's majority class.
double purity(const Partition& partition, const std::vector<std::string>& labels);

// Fraction of point pairs on which the partition and the labels agree
// (paired together in both, or separated in both).
double rand_index(const Partition& partition, const std::vector<std::string>& labels);

}  // namespace hkens
