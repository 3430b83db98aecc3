#include "dtslice/agents/agent.hpp"

#include "dtslice/errors.hpp"
#include "dtslice/nn/loss.hpp"

#include <algorithm>

namespace dtslice::agents {

Algo algo_from_string(const std::string &name) {
    if (name == "dqn")
        return Algo::Dqn;
    if (name == "ddqn")
        return Algo::Ddqn;
    throw ConfigError("unknown algorithm '" + name + "' (expected dqn or ddqn)");
}

std::string algo_to_string(Algo algo) { return algo == Algo::Dqn ? "dqn" : "ddqn"; }

void AgentConfig::validate() const {
    if (discount < 0.0 || discount >= 1.0)
        throw ConfigError("agent: discount must lie in [0, 1)");
    if (explore_start < 0.0 || explore_start > 1.0 || explore_end < 0.0 || explore_end > 1.0)
        throw ConfigError("agent: exploration rates must lie in [0, 1]");
    if (explore_decay_steps < 1)
        throw ConfigError("agent: explore_decay_steps must be >= 1");
    if (batch_size < 1)
        throw ConfigError("agent: batch_size must be >= 1");
    if (replay_capacity < static_cast<std::size_t>(batch_size))
        throw ConfigError("agent: replay_capacity must be >= batch_size");
    if (target_sync_period < 1)
        throw ConfigError("agent: target_sync_period must be >= 1");
    if (lr <= 0.0)
        throw ConfigError("agent: lr must be > 0");
    for (int w : hidden_widths)
        if (w < 1)
            throw ConfigError("agent: hidden widths must be >= 1");
}

int argmax_lowest(const Eigen::VectorXd &values) {
    int best = 0;
    for (int i = 1; i < values.size(); ++i)
        if (values(i) > values(best))
            best = i;
    return best;
}

nn::Vector td_targets(const std::vector<Transition> &batch, const nn::ParamSet &online_params,
                      const nn::ParamSet &target_params, const nn::MlpSpec &spec, Algo algo, double discount) {
    if (batch.empty())
        throw StateError("td_targets: empty batch");
    const Eigen::Index b = static_cast<Eigen::Index>(batch.size());
    nn::Matrix next_states(b, spec.input_width());
    for (Eigen::Index i = 0; i < b; ++i)
        next_states.row(i) = batch[static_cast<std::size_t>(i)].s_next.transpose();

    const nn::Matrix q_target = nn::mlp_forward(target_params, spec, next_states);
    nn::Vector y(b);
    if (algo == Algo::Dqn) {
        for (Eigen::Index i = 0; i < b; ++i)
            y(i) = batch[static_cast<std::size_t>(i)].r + discount * q_target.row(i).maxCoeff();
    } else {
        const nn::Matrix q_online = nn::mlp_forward(online_params, spec, next_states);
        for (Eigen::Index i = 0; i < b; ++i) {
            const int best = argmax_lowest(q_online.row(i).transpose());
            y(i) = batch[static_cast<std::size_t>(i)].r + discount * q_target(i, best);
        }
    }
    return y;
}

DqnAgent::DqnAgent(int state_dim, int num_actions, AgentConfig cfg, std::uint64_t seed)
    : cfg_(std::move(cfg)), rng_(seed) {
    cfg_.validate();
    if (state_dim < 1 || num_actions < 1)
        throw ConfigError("agent: state_dim and num_actions must be >= 1");
    spec_.widths.push_back(state_dim);
    for (int w : cfg_.hidden_widths)
        spec_.widths.push_back(w);
    spec_.widths.push_back(num_actions);
    online_ = nn::mlp_init(spec_, rng_);
    target_ = online_;
    opt_ = nn::AdamState::for_params(online_, nn::AdamConfig{cfg_.lr});
}

int DqnAgent::select_action(const Eigen::VectorXd &obs, double explore_rate) {
    const double draw = rng_.uniform();
    if (draw < explore_rate)
        return static_cast<int>(rng_.uniform_index(static_cast<std::uint64_t>(num_actions())));
    return argmax_lowest(q_values(obs));
}

Eigen::VectorXd DqnAgent::q_values(const Eigen::VectorXd &obs) const {
    if (obs.size() != spec_.input_width())
        throw ShapeError("DqnAgent::q_values: observation width mismatch");
    return nn::mlp_forward(online_, spec_, obs.transpose()).row(0).transpose();
}

double DqnAgent::train_step(const ReplayBuffer &buffer) {
    if (buffer.size() < static_cast<std::size_t>(cfg_.batch_size))
        throw StateError("DqnAgent::train_step: buffer smaller than one minibatch");
    const std::vector<Transition> batch = buffer.sample(static_cast<std::size_t>(cfg_.batch_size), rng_);
    return train_on_batch(batch);
}

double DqnAgent::train_on_batch(const std::vector<Transition> &batch, double proximal_weight,
                                const nn::Vector *reference) {
    if (batch.empty())
        throw StateError("DqnAgent::train_on_batch: empty batch");
    const nn::Vector y = td_targets(batch, online_, target_, spec_, cfg_.algo, cfg_.discount);

    const Eigen::Index b = static_cast<Eigen::Index>(batch.size());
    nn::Matrix states(b, spec_.input_width());
    std::vector<int> actions(batch.size());
    for (Eigen::Index i = 0; i < b; ++i) {
        states.row(i) = batch[static_cast<std::size_t>(i)].s.transpose();
        actions[static_cast<std::size_t>(i)] = batch[static_cast<std::size_t>(i)].a;
    }

    nn::LossSpec loss;
    loss.kind = nn::LossSpec::Kind::Td;
    loss.labels = std::move(actions);
    loss.td_targets = y;
    nn::ParamSet grads;
    double value = nn::mlp_loss_and_grad(online_, spec_, states, loss, &grads);
    if (proximal_weight > 0.0) {
        if (reference == nullptr)
            throw StateError("DqnAgent::train_on_batch: proximal penalty needs a reference vector");
        const nn::Vector diff = flat_online() - *reference;
        value += 0.5 * proximal_weight * diff.squaredNorm();
        const nn::ParamSet penalty = nn::unflatten(proximal_weight * diff, grads);
        auto pit = penalty.tensors().begin();
        for (auto &[name, g] : grads.tensors()) {
            g += pit->second;
            ++pit;
        }
    }
    nn::adam_update(online_, grads, opt_);

    train_steps_ += 1;
    if (train_steps_ % cfg_.target_sync_period == 0)
        sync_target();
    return value;
}

void DqnAgent::sync_target() { target_ = online_; }

double DqnAgent::explore_rate(long real_step) const {
    const double frac = std::min(1.0, static_cast<double>(real_step) / static_cast<double>(cfg_.explore_decay_steps));
    return cfg_.explore_start + (cfg_.explore_end - cfg_.explore_start) * frac;
}

void DqnAgent::set_flat_online(const nn::Vector &flat) { online_ = nn::unflatten(flat, online_); }

void DqnAgent::copy_learner_state_from(const DqnAgent &other) {
    if (!online_.same_shape(other.online_))
        throw ShapeError("copy_learner_state_from: incompatible architectures");
    online_ = other.online_;
    target_ = other.target_;
    opt_ = other.opt_;
    train_steps_ = other.train_steps_;
}

} // namespace dtslice::agents
