#pragma once

#include <cstdint>
#include <vector>

namespace dtslice {

// The action set is the set of positive integer compositions of K bandwidth
// units across N slices, enumerated in lexicographic ascending order. Every
// slice always receives at least one unit.

// C(n, k) in exact 64-bit arithmetic; throws std::overflow_error if the value
// does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Number of valid actions: C(K-1, N-1).
std::uint64_t action_count(int units, int slices);

// Index -> allocation vector (length `slices`, entries >= 1, sum == units).
std::vector<int> decode_action(std::uint64_t index, int units, int slices);

// Allocation vector -> index. Inverse of decode_action.
std::uint64_t encode_action(const std::vector<int> &alloc);

} // namespace dtslice
