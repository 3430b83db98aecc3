#pragma once

#include "dtslice/nn/paramset.hpp"

namespace dtslice::nn {

struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

// Adaptive-moment optimizer state. Moments start at zero and mirror the
// parameter layout they optimize.
struct AdamState {
    AdamConfig config;
    ParamSet m;
    ParamSet v;
    long step = 0;

    static AdamState for_params(const ParamSet &params, const AdamConfig &config = {});
};

// One bias-corrected update, in place.
void adam_update(ParamSet &params, const ParamSet &grads, AdamState &state);

} // namespace dtslice::nn
