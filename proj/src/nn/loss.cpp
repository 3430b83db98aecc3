#include "dtslice/nn/loss.hpp"

#include "dtslice/errors.hpp"

#include <cmath>

namespace dtslice::nn {

double mse_loss(const Matrix &out, const Matrix &target, Matrix *d_out) {
    if (out.rows() != target.rows() || out.cols() != target.cols())
        throw ShapeError("mse_loss: output/target shape mismatch");
    const double inv_b = 1.0 / static_cast<double>(out.rows());
    const Matrix residual = out - target;
    if (d_out)
        *d_out = 2.0 * inv_b * residual;
    return inv_b * residual.squaredNorm();
}

double cross_entropy_loss(const Matrix &logits, const std::vector<int> &labels, Matrix *d_out) {
    if (static_cast<Eigen::Index>(labels.size()) != logits.rows())
        throw ShapeError("cross_entropy_loss: one label per row required");
    const Eigen::Index batch = logits.rows();
    const double inv_b = 1.0 / static_cast<double>(batch);
    Matrix probs(logits.rows(), logits.cols());
    for (Eigen::Index i = 0; i < batch; ++i) {
        const double row_max = logits.row(i).maxCoeff();
        Eigen::ArrayXd e = (logits.row(i).array() - row_max).exp();
        probs.row(i) = (e / e.sum()).matrix();
    }
    double loss = 0.0;
    for (Eigen::Index i = 0; i < batch; ++i) {
        const int label = labels[static_cast<std::size_t>(i)];
        if (label < 0 || label >= logits.cols())
            throw ShapeError("cross_entropy_loss: label out of range");
        loss -= std::log(probs(i, label));
    }
    if (d_out) {
        *d_out = probs * inv_b;
        for (Eigen::Index i = 0; i < batch; ++i)
            (*d_out)(i, labels[static_cast<std::size_t>(i)]) -= inv_b;
    }
    return loss * inv_b;
}

double td_loss(const Matrix &q_values, const std::vector<int> &actions, const Vector &targets, Matrix *d_out) {
    const Eigen::Index batch = q_values.rows();
    if (static_cast<Eigen::Index>(actions.size()) != batch || targets.size() != batch)
        throw ShapeError("td_loss: actions/targets must match batch size");
    const double inv_b = 1.0 / static_cast<double>(batch);
    if (d_out)
        d_out->setZero(q_values.rows(), q_values.cols());
    double loss = 0.0;
    for (Eigen::Index i = 0; i < batch; ++i) {
        const int a = actions[static_cast<std::size_t>(i)];
        if (a < 0 || a >= q_values.cols())
            throw ShapeError("td_loss: action index out of range");
        const double diff = q_values(i, a) - targets(i);
        loss += diff * diff;
        if (d_out)
            (*d_out)(i, a) = 2.0 * inv_b * diff;
    }
    return loss * inv_b;
}

double apply_loss(const LossSpec &loss, const Matrix &out, Matrix *d_out) {
    switch (loss.kind) {
    case LossSpec::Kind::Mse:
        return mse_loss(out, loss.mse_targets, d_out);
    case LossSpec::Kind::CrossEntropy:
        return cross_entropy_loss(out, loss.labels, d_out);
    case LossSpec::Kind::Td:
        return td_loss(out, loss.labels, loss.td_targets, d_out);
    }
    throw ConfigError("apply_loss: unsupported loss kind");
}

double mlp_loss_and_grad(const ParamSet &params, const MlpSpec &spec, const Matrix &x, const LossSpec &loss,
                         ParamSet *grads) {
    MlpCache cache;
    const Matrix out = mlp_forward(params, spec, x, grads ? &cache : nullptr);
    Matrix d_out;
    const double value = apply_loss(loss, out, grads ? &d_out : nullptr);
    if (grads)
        *grads = mlp_backward(params, spec, cache, d_out);
    return value;
}

double lstm_loss_and_grad(const ParamSet &params, const LstmSpec &spec, const std::vector<Matrix> &sequence,
                          const LossSpec &loss, ParamSet *grads) {
    LstmCache cache;
    const Matrix out = lstm_forward(params, spec, sequence, grads ? &cache : nullptr);
    Matrix d_out;
    const double value = apply_loss(loss, out, grads ? &d_out : nullptr);
    if (grads)
        *grads = lstm_backward(params, spec, cache, d_out);
    return value;
}

} // namespace dtslice::nn
