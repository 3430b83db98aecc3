#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace dtslice {

// Deterministic random source used throughout the project.
//
// All distributions are implemented on top of raw mt19937_64 output instead of
// <random> distribution objects, whose algorithms differ between standard
// library implementations. Runs are therefore reproducible across toolchains,
// and the full generator state round-trips through checkpoints as text.
class Rng {
public:
    Rng() : Rng(0) {}
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1).
    double uniform();

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    // Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::uint64_t uniform_index(std::uint64_t n);

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Exponential with the given mean (mean <= 0 returns 0).
    double exponential(double mean);

    std::uint64_t next_u64() { return engine_(); }

    // Textual state, suitable for checkpoints.
    std::string serialize() const;
    void deserialize(const std::string &state);

    // Derives an independent stream seed from a master seed and a stream tag.
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

private:
    std::mt19937_64 engine_;
};

} // namespace dtslice
