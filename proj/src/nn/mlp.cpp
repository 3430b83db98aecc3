#include "dtslice/nn/mlp.hpp"

#include "dtslice/errors.hpp"

#include <cmath>

namespace dtslice::nn {

namespace {
std::string weight_name(int layer) { return "W" + std::to_string(layer); }
std::string bias_name(int layer) { return "b" + std::to_string(layer); }
} // namespace

ParamSet mlp_init(const MlpSpec &spec, Rng &rng) {
    if (spec.widths.size() < 2)
        throw ShapeError("mlp_init: need at least input and output widths");
    for (int w : spec.widths)
        if (w < 1)
            throw ShapeError("mlp_init: layer widths must be >= 1");
    ParamSet params;
    for (int l = 0; l < spec.num_layers(); ++l) {
        const int fan_in = spec.widths[static_cast<std::size_t>(l)];
        const int fan_out = spec.widths[static_cast<std::size_t>(l) + 1];
        const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
        Matrix &w = params.add(weight_name(l), fan_out, fan_in);
        for (Eigen::Index i = 0; i < w.size(); ++i)
            w.data()[i] = rng.uniform(-bound, bound);
        params.add(bias_name(l), fan_out, 1);
    }
    return params;
}

Matrix mlp_forward(const ParamSet &params, const MlpSpec &spec, const Matrix &x, MlpCache *cache) {
    if (x.cols() != spec.input_width())
        throw ShapeError("mlp_forward: input width " + std::to_string(x.cols()) + " != spec input " +
                         std::to_string(spec.input_width()));
    if (cache) {
        cache->activations.clear();
        cache->preacts.clear();
        cache->activations.push_back(x);
    }
    Matrix a = x;
    for (int l = 0; l < spec.num_layers(); ++l) {
        const Matrix &w = params.at(weight_name(l));
        const Matrix &b = params.at(bias_name(l));
        Matrix z = a * w.transpose();
        z.rowwise() += b.col(0).transpose();
        if (l + 1 < spec.num_layers())
            a = z.cwiseMax(0.0);
        else
            a = z;
        if (cache) {
            cache->preacts.push_back(std::move(z));
            cache->activations.push_back(a);
        }
    }
    return a;
}

ParamSet mlp_backward(const ParamSet &params, const MlpSpec &spec, const MlpCache &cache, const Matrix &d_out) {
    const int layers = spec.num_layers();
    if (static_cast<int>(cache.preacts.size()) != layers)
        throw StateError("mlp_backward: cache does not match spec (run mlp_forward with a cache first)");
    ParamSet grads;
    Matrix delta = d_out; // dL/dz of the current layer (output layer is linear)
    for (int l = layers - 1; l >= 0; --l) {
        const Matrix &a_prev = cache.activations[static_cast<std::size_t>(l)];
        grads.add(weight_name(l), delta.transpose() * a_prev);
        grads.add(bias_name(l), delta.colwise().sum().transpose());
        if (l > 0) {
            const Matrix &w = params.at(weight_name(l));
            Matrix d_act = delta * w;
            // ReLU mask from the previous layer's pre-activation.
            const Matrix &z_prev = cache.preacts[static_cast<std::size_t>(l) - 1];
            delta = (z_prev.array() > 0.0).cast<double>() * d_act.array();
        }
    }
    return grads;
}

} // namespace dtslice::nn
