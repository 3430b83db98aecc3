#pragma once

#include "dtslice/agents/agent.hpp"
#include "dtslice/env/environment.hpp"
#include "dtslice/io/config.hpp"
#include "dtslice/io/metrics.hpp"
#include "dtslice/twin/session.hpp"
#include "dtslice/twin/twin.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dtslice::orch {

struct RunLedger {
    long real_steps = 0;
    long twin_steps = 0;
    std::vector<std::pair<std::string, double>> phase_wall_ms;
};

struct RunResult {
    std::vector<io::StepRecord> steps;  // every real-environment interaction, in order
    std::vector<long> twin_counts;      // cumulative twin interactions at each real step
    std::vector<io::MetricsRow> rounds; // aggregated per analysis.round_size
    std::vector<double> final_obs;      // observation after the last real step
    RunLedger ledger;
};

// Elementwise convex blend: zeta * theta1 + (1 - zeta) * theta2.
nn::Vector empower(const nn::Vector &theta1, const nn::Vector &theta2, double zeta);

// Runs the two-loop training procedure: repeatedly collect real transitions,
// calibrate the twin on them, pre-train agent 2 inside the twin, blend its
// parameters into agent 1, and fine-tune agent 1 in the real environment.
// With the twin disabled the loop degenerates to plain value-based training
// and reproduces run_baseline() bit-for-bit on the same seed.
class Orchestrator {
public:
    explicit Orchestrator(const io::ExperimentConfig &cfg);

    RunResult run_algorithm1();

    // Individual phases (run_algorithm1 is their composition).
    twin::TwinDataset collect_data(int count, bool uniform_policy);
    void train_agent2_in_twin(twin::TwinSession &session, int count);
    void train_agent_real(int count);

    env::SlicingEnv &environment() { return env_; }
    agents::DqnAgent &agent1() { return *agent1_; }
    agents::DqnAgent &agent2();
    twin::Twin &twin_model();
    const RunLedger &ledger() const { return ledger_; }

private:
    void record_real_step(const Eigen::VectorXd &obs, int action, const env::StepOutcome &out);

    io::ExperimentConfig cfg_;
    env::SlicingEnv env_;
    std::unique_ptr<agents::DqnAgent> agent1_;
    std::unique_ptr<agents::DqnAgent> agent2_;
    std::unique_ptr<twin::Twin> twin_;
    agents::ReplayBuffer buffer1_;
    agents::ReplayBuffer buffer2_;
    RunLedger ledger_;
    std::vector<io::StepRecord> steps_;
    std::vector<long> twin_counts_;
    int outer_iteration_ = 0;
};

// Standalone trainer for the configured algorithm: outer_iterations *
// real_steps epsilon-greedy interactions with per-step replay training and no
// twin machinery. The baseline the twin-enhanced runs are compared against.
RunResult run_baseline(const io::ExperimentConfig &cfg, std::unique_ptr<agents::DqnAgent> *agent_out = nullptr);

// Inner-loop training against a twin session: act, predict, store, train.
// Touches no real environment; the only interaction counter that moves is the
// twin one.
void train_agent_in_twin(agents::DqnAgent &agent, twin::TwinSession &session, agents::ReplayBuffer &buffer, int steps,
                         double eps_twin, RunLedger *ledger = nullptr);

// Greedy rollout of a fixed policy network; pure evaluation, fresh
// environment, no learning. Returns per-step records and their round means.
struct EvalResult {
    double mean_utility = 0.0;
    double mean_reward = 0.0;
    std::vector<io::StepRecord> steps;
};
EvalResult evaluate_greedy(const io::ExperimentConfig &cfg, const nn::MlpSpec &spec, const nn::ParamSet &params,
                           int num_steps, std::uint64_t env_seed);

// Uniform-random policy rollout under the same protocol.
EvalResult evaluate_random(const io::ExperimentConfig &cfg, int num_steps, std::uint64_t env_seed,
                           std::uint64_t policy_seed);

} // namespace dtslice::orch
