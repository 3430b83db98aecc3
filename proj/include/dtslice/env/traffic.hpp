#pragma once

#include "dtslice/env/types.hpp"
#include "dtslice/rng.hpp"

namespace dtslice::env {

// Number of packets arriving for one slice over one step window.
long sample_arrivals(const SliceSpec &spec, Rng &rng);

} // namespace dtslice::env
