#pragma once

#include <cstdint>
#include <vector>

namespace ryser {

std::int64_t binom(int n, int k);

// Colex rank of a sorted k-subset (combinatorial number system); independent of the ground set size.
std::int64_t rank_subset(const std::vector<int>& s);
std::vector<int> unrank_subset(std::int64_t rank, int k);

// All k-subsets of {0..n-1} in colex order (matches rank_subset).
std::vector<std::vector<int>> all_subsets(int n, int k);

// All k-subsets of the given sorted set, lexicographic.
std::vector<std::vector<int>> subsets_of(const std::vector<int>& s, int k);

}  // namespace ryser
