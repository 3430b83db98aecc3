#pragma once

#include "dtslice/nn/paramset.hpp"
#include "dtslice/rng.hpp"

#include <vector>

namespace dtslice::nn {

// Fully connected network: ReLU on hidden layers, linear output.
// Parameter names: W0/b0 .. W{L-1}/b{L-1}, with Wi shaped (widths[i+1] x widths[i]).
struct MlpSpec {
    std::vector<int> widths; // input, hidden..., output

    int input_width() const { return widths.front(); }
    int output_width() const { return widths.back(); }
    int num_layers() const { return static_cast<int>(widths.size()) - 1; }
};

// Fan-in-scaled uniform initialization, biases zero.
ParamSet mlp_init(const MlpSpec &spec, Rng &rng);

struct MlpCache {
    std::vector<Matrix> activations; // activations[0] = input, one per layer output
    std::vector<Matrix> preacts;     // pre-activation of each layer
};

// x is batch-major (B x input). Returns B x output. Pass a cache to enable
// backpropagation.
Matrix mlp_forward(const ParamSet &params, const MlpSpec &spec, const Matrix &x, MlpCache *cache = nullptr);

// d_out is dL/d(output), B x output. Returns gradients with the same tensor
// layout as the parameters.
ParamSet mlp_backward(const ParamSet &params, const MlpSpec &spec, const MlpCache &cache, const Matrix &d_out);

} // namespace dtslice::nn
