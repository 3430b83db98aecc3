#include "dtslice/action_codec.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace dtslice {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is exact at every step.
        const std::uint64_t num = n - k + i;
        if (result > UINT64_MAX / num)
            throw std::overflow_error("binomial: value exceeds 64 bits");
        result = result * num / i;
    }
    return result;
}

std::uint64_t action_count(int units, int slices) {
    if (slices < 1)
        throw std::invalid_argument("action_count: need at least one slice");
    if (units < slices)
        throw std::invalid_argument("action_count: units must be >= slices (every slice gets >= 1 unit)");
    return binomial(static_cast<std::uint64_t>(units - 1), static_cast<std::uint64_t>(slices - 1));
}

std::vector<int> decode_action(std::uint64_t index, int units, int slices) {
    const std::uint64_t total = action_count(units, slices);
    if (index >= total)
        throw std::out_of_range("decode_action: index " + std::to_string(index) + " out of range [0, " +
                                std::to_string(total) + ")");
    std::vector<int> alloc;
    alloc.reserve(static_cast<std::size_t>(slices));
    int remaining = units;
    for (int part = 0; part < slices - 1; ++part) {
        const int parts_left = slices - part - 1;
        for (int first = 1; first <= remaining - parts_left; ++first) {
            // Compositions of (remaining - first) into parts_left positive parts.
            const std::uint64_t block =
                binomial(static_cast<std::uint64_t>(remaining - first - 1), static_cast<std::uint64_t>(parts_left - 1));
            if (index < block) {
                alloc.push_back(first);
                remaining -= first;
                break;
            }
            index -= block;
        }
    }
    alloc.push_back(remaining);
    return alloc;
}

std::uint64_t encode_action(const std::vector<int> &alloc) {
    const int slices = static_cast<int>(alloc.size());
    if (slices < 1)
        throw std::invalid_argument("encode_action: empty allocation");
    int units = 0;
    for (int v : alloc) {
        if (v < 1)
            throw std::invalid_argument("encode_action: every slice must receive at least one unit");
        units += v;
    }
    std::uint64_t index = 0;
    int remaining = units;
    for (int part = 0; part < slices - 1; ++part) {
        const int parts_left = slices - part - 1;
        for (int first = 1; first < alloc[static_cast<std::size_t>(part)]; ++first)
            index += binomial(static_cast<std::uint64_t>(remaining - first - 1),
                              static_cast<std::uint64_t>(parts_left - 1));
        remaining -= alloc[static_cast<std::size_t>(part)];
    }
    return index;
}

} // namespace dtslice
