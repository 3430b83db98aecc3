#include "dtslice/nn/grad_check.hpp"

#include <algorithm>
#include <cmath>

namespace dtslice::nn {

GradCheckReport gradient_check(const ParamSet &params, const ParamSet &analytic_grads,
                               const std::function<double(const ParamSet &)> &loss_fn, double tolerance,
                               double step) {
    GradCheckReport report;
    ParamSet probe = params;
    for (const auto &[name, grad] : analytic_grads.tensors()) {
        Matrix &tensor = probe.at(name);
        for (Eigen::Index i = 0; i < tensor.size(); ++i) {
            const double saved = tensor.data()[i];
            tensor.data()[i] = saved + step;
            const double plus = loss_fn(probe);
            tensor.data()[i] = saved - step;
            const double minus = loss_fn(probe);
            tensor.data()[i] = saved;
            const double numeric = (plus - minus) / (2.0 * step);
            const double analytic = grad.data()[i];
            const double scale = std::max({1.0, std::abs(numeric), std::abs(analytic)});
            const double rel = std::abs(numeric - analytic) / scale;
            if (rel > report.max_rel_error) {
                report.max_rel_error = rel;
                report.worst_tensor = name;
            }
        }
    }
    report.passed = report.max_rel_error < tolerance;
    return report;
}

GradCheckReport mlp_gradient_check(const MlpSpec &spec, const LossSpec &loss, const Matrix &x, const ParamSet &params,
                                   double tolerance) {
    ParamSet grads;
    mlp_loss_and_grad(params, spec, x, loss, &grads);
    return gradient_check(
        params, grads, [&](const ParamSet &p) { return mlp_loss_and_grad(p, spec, x, loss, nullptr); }, tolerance);
}

GradCheckReport lstm_gradient_check(const LstmSpec &spec, const LossSpec &loss, const std::vector<Matrix> &sequence,
                                    const ParamSet &params, double tolerance) {
    ParamSet grads;
    lstm_loss_and_grad(params, spec, sequence, loss, &grads);
    return gradient_check(
        params, grads, [&](const ParamSet &p) { return lstm_loss_and_grad(p, spec, sequence, loss, nullptr); },
        tolerance);
}

} // namespace dtslice::nn
