#pragma once

#include "dtslice/nn/lstm.hpp"
#include "dtslice/nn/mlp.hpp"
#include "dtslice/nn/paramset.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace dtslice::nn {

// The three loss families the project trains with. Each returns the scalar
// loss and writes dL/d(output) for backpropagation.

// L = (1/B) * sum_i ||out_i - target_i||^2
double mse_loss(const Matrix &out, const Matrix &target, Matrix *d_out);

// L = -(1/B) * sum_i log softmax(out_i)[label_i]
double cross_entropy_loss(const Matrix &logits, const std::vector<int> &labels, Matrix *d_out);

// Temporal-difference regression on the taken actions with frozen targets:
// L = (1/B) * sum_i (out_i[action_i] - target_i)^2
double td_loss(const Matrix &q_values, const std::vector<int> &actions, const Vector &targets, Matrix *d_out);

// A loss target bundle for the generic gradient entry points.
struct LossSpec {
    enum class Kind { Mse, CrossEntropy, Td } kind = Kind::Mse;
    Matrix mse_targets;            // Kind::Mse
    std::vector<int> labels;       // Kind::CrossEntropy / Kind::Td (actions)
    Vector td_targets;             // Kind::Td
};

// Applies the requested loss to a network output. Returns loss, fills d_out.
double apply_loss(const LossSpec &loss, const Matrix &out, Matrix *d_out);

// Loss + exact analytic gradients for an MLP on a batch (rows = samples).
double mlp_loss_and_grad(const ParamSet &params, const MlpSpec &spec, const Matrix &x, const LossSpec &loss,
                         ParamSet *grads);

// Same for the LSTM on a batch of equal-length sequences.
double lstm_loss_and_grad(const ParamSet &params, const LstmSpec &spec, const std::vector<Matrix> &sequence,
                          const LossSpec &loss, ParamSet *grads);

} // namespace dtslice::nn
