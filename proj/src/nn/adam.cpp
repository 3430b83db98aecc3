#include "dtslice/nn/adam.hpp"

#include "dtslice/errors.hpp"

#include <cmath>

namespace dtslice::nn {

AdamState AdamState::for_params(const ParamSet &params, const AdamConfig &config) {
    AdamState state;
    state.config = config;
    state.m = params.zeros_like();
    state.v = params.zeros_like();
    return state;
}

void adam_update(ParamSet &params, const ParamSet &grads, AdamState &state) {
    if (!params.same_shape(grads) || !params.same_shape(state.m))
        throw ShapeError("adam_update: parameter/gradient/state shapes disagree");
    state.step += 1;
    params.step_count += 1;
    const AdamConfig &c = state.config;
    const double bc1 = 1.0 - std::pow(c.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(c.beta2, static_cast<double>(state.step));
    auto gp = grads.tensors().begin();
    auto mp = state.m.tensors().begin();
    auto vp = state.v.tensors().begin();
    for (auto &[name, t] : params.tensors()) {
        Matrix &m = mp->second;
        Matrix &v = vp->second;
        const Matrix &g = gp->second;
        m = c.beta1 * m + (1.0 - c.beta1) * g;
        v = (c.beta2 * v.array() + (1.0 - c.beta2) * g.array().square()).matrix();
        t.array() -= c.lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + c.epsilon);
        ++gp;
        ++mp;
        ++vp;
    }
}

} // namespace dtslice::nn
