#include "dtslice/rng.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dtslice {

double Rng::uniform() {
    // 53-bit mantissa construction gives every representable value in [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("uniform_index: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo)
        throw std::invalid_argument("uniform_int: hi < lo");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(uniform_index(span));
}

double Rng::exponential(double mean) {
    if (mean <= 0.0)
        return 0.0;
    // 1 - uniform() is in (0, 1], so the log never sees zero.
    return -mean * std::log(1.0 - uniform());
}

std::string Rng::serialize() const {
    std::ostringstream os;
    os << engine_;
    return os.str();
}

void Rng::deserialize(const std::string &state) {
    std::istringstream is(state);
    is >> engine_;
    if (is.fail())
        throw std::invalid_argument("Rng::deserialize: malformed generator state");
}

std::uint64_t Rng::derive_seed(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 over the master seed offset by the stream tag.
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace dtslice
