#pragma once

#include "dtslice/nn/loss.hpp"

#include <functional>
#include <string>

namespace dtslice::nn {

struct GradCheckReport {
    double max_rel_error = 0.0;
    std::string worst_tensor;
    bool passed = false;
};

// Compares analytic gradients against central finite differences of a scalar
// loss evaluated on flattened parameters. Always runs in double precision.
GradCheckReport gradient_check(const ParamSet &params, const ParamSet &analytic_grads,
                               const std::function<double(const ParamSet &)> &loss_fn, double tolerance,
                               double step = 1e-5);

// Convenience wrappers for the two architectures the project trains.
GradCheckReport mlp_gradient_check(const MlpSpec &spec, const LossSpec &loss, const Matrix &x, const ParamSet &params,
                                   double tolerance);
GradCheckReport lstm_gradient_check(const LstmSpec &spec, const LossSpec &loss, const std::vector<Matrix> &sequence,
                                    const ParamSet &params, double tolerance);

} // namespace dtslice::nn
