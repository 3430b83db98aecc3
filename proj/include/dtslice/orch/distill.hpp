#pragma once

#include "dtslice/nn/mlp.hpp"

#include <cstdint>
#include <vector>

namespace dtslice::orch {

struct DistillConfig {
    std::vector<int> hidden = {16, 16};
    long budget = 10000; // gradient updates
    int batch_size = 64;
    double lr = 1e-3;
    double holdout_fraction = 0.2;
};

struct DistillResult {
    nn::MlpSpec student_spec;
    nn::ParamSet student_params;
    double holdout_agreement = 0.0; // greedy-action match on held-out states
    double final_loss = 0.0;        // cross-entropy on the last minibatch
    long updates = 0;
};

// Trains a small policy network to imitate the teacher's greedy actions.
// States are pseudo-labeled with argmax_a Q_teacher(s, a); the student
// minimizes the negative log-likelihood of those labels under its softmax for
// the given update budget. Agreement is reported on a held-out state split.
DistillResult distill(const nn::MlpSpec &teacher_spec, const nn::ParamSet &teacher_params,
                      const std::vector<Eigen::VectorXd> &state_pool, const DistillConfig &cfg, std::uint64_t seed);

} // namespace dtslice::orch
