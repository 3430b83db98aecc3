#include "dtslice/twin/twin.hpp"

#include "dtslice/errors.hpp"
#include "dtslice/nn/loss.hpp"

#include <algorithm>
#include <cmath>

namespace dtslice::twin {

void TwinConfig::validate() const {
    if (lstm_hidden < 1)
        throw ConfigError("twin: lstm_hidden must be >= 1");
    if (window < 1)
        throw ConfigError("twin: window must be >= 1");
    if (epochs < 0)
        throw ConfigError("twin: epochs must be >= 0");
    if (lr <= 0.0)
        throw ConfigError("twin: lr must be > 0");
    if (batch_size < 1)
        throw ConfigError("twin: batch_size must be >= 1");
    if (rollout_reset_period < 1)
        throw ConfigError("twin: rollout_reset_period must be >= 1");
    if (holdout_fraction < 0.0 || holdout_fraction >= 1.0)
        throw ConfigError("twin: holdout_fraction must lie in [0, 1)");
    for (int w : reward_hidden)
        if (w < 1)
            throw ConfigError("twin: reward_hidden widths must be >= 1");
}

Twin::Twin(int state_dim, TwinConfig cfg, std::uint64_t seed) : state_dim_(state_dim), cfg_(std::move(cfg)), rng_(seed) {
    cfg_.validate();
    if (state_dim_ < 1)
        throw ConfigError("twin: state_dim must be >= 1");
    pspec_ = nn::LstmSpec{2 * state_dim_, cfg_.lstm_hidden, state_dim_};
    rspec_.widths.push_back(2 * state_dim_);
    for (int w : cfg_.reward_hidden)
        rspec_.widths.push_back(w);
    rspec_.widths.push_back(1);
    p_params_ = nn::lstm_init(pspec_, rng_);
    r_params_ = nn::mlp_init(rspec_, rng_);
    p_opt_ = nn::AdamState::for_params(p_params_, nn::AdamConfig{cfg_.lr});
    r_opt_ = nn::AdamState::for_params(r_params_, nn::AdamConfig{cfg_.lr});
}

Twin::Batch Twin::assemble(const TwinDataset &dataset, const std::vector<std::size_t> &indices) const {
    Batch batch;
    const Eigen::Index b = static_cast<Eigen::Index>(indices.size());
    const int in_width = 2 * state_dim_;
    batch.sequence.assign(static_cast<std::size_t>(cfg_.window), nn::Matrix::Zero(b, in_width));
    batch.last_pair.resize(b, in_width);
    batch.next_states.resize(b, state_dim_);
    batch.rewards.resize(b, 1);
    for (Eigen::Index row = 0; row < b; ++row) {
        const std::size_t idx = indices[static_cast<std::size_t>(row)];
        const auto ctx = dataset.context(idx, cfg_.window);
        // Zero padding occupies the front; the real context ends at the last step.
        const std::size_t pad = static_cast<std::size_t>(cfg_.window) - ctx.size();
        for (std::size_t t = 0; t < ctx.size(); ++t) {
            batch.sequence[pad + t].row(row).head(state_dim_) = ctx[t].first.transpose();
            batch.sequence[pad + t].row(row).tail(state_dim_) = ctx[t].second.transpose();
        }
        batch.last_pair.row(row) = batch.sequence.back().row(row);
        batch.next_states.row(row) = dataset.item(idx).s_next.transpose();
        batch.rewards(row, 0) = dataset.item(idx).r;
    }
    return batch;
}

TwinReport Twin::fit(const TwinDataset &dataset) {
    if (dataset.empty())
        throw StateError("Twin::fit: empty dataset");
    const std::vector<std::size_t> &train = dataset.train_indices();
    if (train.empty())
        throw StateError("Twin::fit: no training items after split");

    TwinReport report;
    std::vector<std::size_t> order(train);
    for (int epoch = 0; epoch < cfg_.epochs; ++epoch) {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng_.uniform_index(i)]);
        double p_sum = 0.0;
        double r_sum = 0.0;
        std::size_t seen = 0;
        for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(cfg_.batch_size)) {
            const std::size_t stop = std::min(order.size(), start + static_cast<std::size_t>(cfg_.batch_size));
            const std::vector<std::size_t> chunk(order.begin() + static_cast<long>(start),
                                                 order.begin() + static_cast<long>(stop));
            const Batch batch = assemble(dataset, chunk);

            nn::LossSpec p_loss;
            p_loss.kind = nn::LossSpec::Kind::Mse;
            p_loss.mse_targets = batch.next_states;
            nn::ParamSet p_grads;
            const double lp = nn::lstm_loss_and_grad(p_params_, pspec_, batch.sequence, p_loss, &p_grads);
            nn::adam_update(p_params_, p_grads, p_opt_);

            nn::LossSpec r_loss;
            r_loss.kind = nn::LossSpec::Kind::Mse;
            r_loss.mse_targets = batch.rewards;
            nn::ParamSet r_grads;
            const double lr_val = nn::mlp_loss_and_grad(r_params_, rspec_, batch.last_pair, r_loss, &r_grads);
            nn::adam_update(r_params_, r_grads, r_opt_);

            p_sum += lp * static_cast<double>(chunk.size());
            r_sum += lr_val * static_cast<double>(chunk.size());
            seen += chunk.size();
        }
        report.state_loss_per_epoch.push_back(p_sum / static_cast<double>(seen));
        report.reward_loss_per_epoch.push_back(r_sum / static_cast<double>(seen));
        if (!std::isfinite(report.state_loss_per_epoch.back()) || !std::isfinite(report.reward_loss_per_epoch.back()))
            throw StateError("Twin::fit: non-finite training loss");
    }
    if (cfg_.epochs > 0)
        calibrated_ = true;
    return report;
}

std::pair<Eigen::VectorXd, double> Twin::predict(
    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> &context) const {
    if (context.empty())
        throw std::invalid_argument("Twin::predict: empty context");
    if (static_cast<int>(context.size()) > cfg_.window)
        throw std::invalid_argument("Twin::predict: context longer than the configured window");
    const int in_width = 2 * state_dim_;
    std::vector<nn::Matrix> seq(static_cast<std::size_t>(cfg_.window), nn::Matrix::Zero(1, in_width));
    const std::size_t pad = static_cast<std::size_t>(cfg_.window) - context.size();
    for (std::size_t t = 0; t < context.size(); ++t) {
        if (context[t].first.size() != state_dim_ || context[t].second.size() != state_dim_)
            throw ShapeError("Twin::predict: context element width mismatch");
        seq[pad + t].row(0).head(state_dim_) = context[t].first.transpose();
        seq[pad + t].row(0).tail(state_dim_) = context[t].second.transpose();
    }
    const nn::Matrix raw = nn::lstm_forward(p_params_, pspec_, seq);
    Eigen::VectorXd next = raw.row(0).transpose().cwiseMax(0.0).cwiseMin(1.0);
    const nn::Matrix r_out = nn::mlp_forward(r_params_, rspec_, seq.back());
    return {next, r_out(0, 0)};
}

std::pair<double, double> Twin::evaluate(const TwinDataset &dataset, const std::vector<std::size_t> &indices) const {
    if (indices.empty())
        throw StateError("Twin::evaluate: no items to evaluate");
    const Batch batch = assemble(dataset, indices);
    nn::Matrix pred = nn::lstm_forward(p_params_, pspec_, batch.sequence);
    // Consumers see clamped states, so the evaluation does too.
    pred = pred.cwiseMax(0.0).cwiseMin(1.0);
    const double lp = (pred - batch.next_states).squaredNorm() / static_cast<double>(indices.size());
    const nn::Matrix r_pred = nn::mlp_forward(r_params_, rspec_, batch.last_pair);
    const double lr_val = (r_pred - batch.rewards).squaredNorm() / static_cast<double>(indices.size());
    return {lp, lr_val};
}

} // namespace dtslice::twin
