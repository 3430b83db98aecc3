#pragma once

#include "dtslice/agents/replay_buffer.hpp"
#include "dtslice/nn/adam.hpp"
#include "dtslice/nn/mlp.hpp"
#include "dtslice/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dtslice::agents {

enum class Algo { Dqn, Ddqn };

Algo algo_from_string(const std::string &name);
std::string algo_to_string(Algo algo);

struct AgentConfig {
    Algo algo = Algo::Dqn;
    double discount = 0.9;
    double explore_start = 1.0;
    double explore_end = 0.05;
    long explore_decay_steps = 3000;
    std::size_t replay_capacity = 50000;
    int batch_size = 64;
    int target_sync_period = 200;
    double lr = 1e-3;
    std::vector<int> hidden_widths = {256, 256, 128, 128};

    void validate() const;
};

// Greedy action with ties broken toward the lowest index.
int argmax_lowest(const Eigen::VectorXd &values);

// TD targets with frozen target parameters. The task is continuing, so no
// terminal masking is applied anywhere.
//   dqn:  y_i = r_i + discount * max_a Q_target(s'_i, a)
//   ddqn: y_i = r_i + discount * Q_target(s'_i, argmax_a Q_online(s'_i, a))
nn::Vector td_targets(const std::vector<Transition> &batch, const nn::ParamSet &online_params,
                      const nn::ParamSet &target_params, const nn::MlpSpec &spec, Algo algo, double discount);

// Value-based agent over a discrete action set; runs either plain or double
// Q-learning depending on the configured algorithm tag.
class DqnAgent {
public:
    DqnAgent(int state_dim, int num_actions, AgentConfig cfg, std::uint64_t seed);

    // With probability explore_rate picks a uniform action, otherwise the
    // greedy one. Always consumes exactly one exploration draw, so action
    // sequences stay aligned across exploration settings.
    int select_action(const Eigen::VectorXd &obs, double explore_rate);

    Eigen::VectorXd q_values(const Eigen::VectorXd &obs) const;

    // Samples a minibatch, regresses the taken actions onto frozen TD targets
    // with one optimizer step, and returns the pre-step loss.
    double train_step(const ReplayBuffer &buffer);

    // One optimizer step on an explicit batch. When proximal_weight > 0 the
    // loss gains (proximal_weight/2) * ||theta - reference||^2 pulling the
    // online parameters toward the reference vector; with weight 0 the update
    // is exactly the plain TD update. Returns the pre-step loss.
    double train_on_batch(const std::vector<Transition> &batch, double proximal_weight = 0.0,
                          const nn::Vector *reference = nullptr);

    void sync_target();

    // Linear exploration decay from explore_start to explore_end over
    // explore_decay_steps real-environment steps.
    double explore_rate(long real_step) const;

    const nn::MlpSpec &spec() const { return spec_; }
    const AgentConfig &config() const { return cfg_; }
    int num_actions() const { return spec_.output_width(); }
    int state_dim() const { return spec_.input_width(); }
    long train_steps() const { return train_steps_; }
    void set_train_steps(long n) { train_steps_ = n; }

    nn::ParamSet &online_params() { return online_; }
    const nn::ParamSet &online_params() const { return online_; }
    nn::ParamSet &target_params() { return target_; }
    const nn::ParamSet &target_params() const { return target_; }
    nn::AdamState &optimizer() { return opt_; }
    const nn::AdamState &optimizer() const { return opt_; }
    Rng &rng() { return rng_; }
    const Rng &rng() const { return rng_; }

    nn::Vector flat_online() const { return nn::flatten(online_); }
    void set_flat_online(const nn::Vector &flat);

    // Clones the learnable state (networks, optimizer moments, counters) but
    // keeps this agent's own random stream.
    void copy_learner_state_from(const DqnAgent &other);

private:
    AgentConfig cfg_;
    nn::MlpSpec spec_;
    nn::ParamSet online_;
    nn::ParamSet target_;
    nn::AdamState opt_;
    Rng rng_;
    long train_steps_ = 0;
};

} // namespace dtslice::agents
