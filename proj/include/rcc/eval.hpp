#pragma once

#include <vector>

namespace rcc {

/// Adjusted Rand index between two labelings of the same n >= 2 items.
/// Binomial sums are accumulated in 64-bit integers and the division happens
/// once at the end, so results are exact up to that single rounding for
/// n <= 10^4. When the chance-correction denominator is zero (both partitions
/// all singletons, or both a single cluster) the partitions are necessarily
/// equal and the index is 1.
double adjusted_rand_index(const std::vector<int>& a,
                           const std::vector<int>& b);

}  // namespace rcc
