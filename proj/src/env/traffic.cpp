#include "dtslice/env/traffic.hpp"

#include "dtslice/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dtslice::env {

long sample_arrivals(const SliceSpec &spec, Rng &rng) {
    const ArrivalSpec &a = spec.arrivals;
    switch (a.kind) {
    case ArrivalSpec::Kind::Uniform:
        return rng.uniform_int(a.low, a.high);
    case ArrivalSpec::Kind::TruncatedExponential: {
        const double x = std::min(rng.exponential(a.mean), a.cap);
        return std::llround(x);
    }
    case ArrivalSpec::Kind::Exponential:
        return std::llround(rng.exponential(a.mean));
    }
    throw ConfigError("sample_arrivals: unknown arrival distribution");
}

} // namespace dtslice::env
