#pragma once

#include "dtslice/nn/paramset.hpp"
#include "dtslice/rng.hpp"

#include <vector>

namespace dtslice::nn {

// Single-layer LSTM with a linear head on the final hidden state.
// Parameter names: Wx (4H x D), Wh (4H x H), b (4H x 1), Wy (O x H), by (O x 1).
// Gate row blocks in order: input, forget, candidate, output.
struct LstmSpec {
    int input = 1;
    int hidden = 1;
    int output = 1;
};

// Fan-in-scaled uniform weights; forget-gate bias starts at 1, all others 0.
ParamSet lstm_init(const LstmSpec &spec, Rng &rng);

struct LstmCache {
    std::vector<Matrix> inputs;          // per step, B x D
    std::vector<Matrix> gates_i, gates_f, gates_g, gates_o;
    std::vector<Matrix> cells;           // c_t, B x H
    std::vector<Matrix> hiddens;         // h_t, B x H
};

// sequence[t] is the batch input at step t (B x D), all steps same batch size.
// Returns the head output on the final hidden state (B x O).
Matrix lstm_forward(const ParamSet &params, const LstmSpec &spec, const std::vector<Matrix> &sequence,
                    LstmCache *cache = nullptr);

// Backpropagation through time from dL/d(output).
ParamSet lstm_backward(const ParamSet &params, const LstmSpec &spec, const LstmCache &cache, const Matrix &d_out);

} // namespace dtslice::nn
