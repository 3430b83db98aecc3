#include "dtslice/orch/orchestrator.hpp"

#include "dtslice/action_codec.hpp"
#include "dtslice/errors.hpp"

#include <chrono>

namespace dtslice::orch {

namespace {

// Stream tags for deriving independent generator seeds from the master seed.
enum SeedStream : std::uint64_t {
    kEnv = 1,
    kAgent1 = 2,
    kAgent2 = 3,
    kTwin = 4,
    kSessionBase = 1000,
    kSplitBase = 2000,
};

class PhaseTimer {
public:
    PhaseTimer(RunLedger &ledger, std::string name)
        : ledger_(ledger), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
    ~PhaseTimer() {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
        for (auto &[name, total] : ledger_.phase_wall_ms) {
            if (name == name_) {
                total += ms;
                return;
            }
        }
        ledger_.phase_wall_ms.emplace_back(name_, ms);
    }

private:
    RunLedger &ledger_;
    std::string name_;
    std::chrono::steady_clock::time_point start_;
};

Eigen::VectorXd alloc_fractions(const std::vector<int> &alloc, int units) {
    Eigen::VectorXd frac(static_cast<Eigen::Index>(alloc.size()));
    for (Eigen::Index n = 0; n < frac.size(); ++n)
        frac(n) = static_cast<double>(alloc[static_cast<std::size_t>(n)]) / static_cast<double>(units);
    return frac;
}

std::vector<double> to_std(const Eigen::VectorXd &v) { return {v.data(), v.data() + v.size()}; }

} // namespace

nn::Vector empower(const nn::Vector &theta1, const nn::Vector &theta2, double zeta) {
    if (theta1.size() != theta2.size())
        throw ShapeError("empower: parameter vectors differ in length");
    return zeta * theta1 + (1.0 - zeta) * theta2;
}

Orchestrator::Orchestrator(const io::ExperimentConfig &cfg)
    : cfg_(cfg), env_([&] {
          env::EnvConfig e = cfg.env;
          e.validate();
          return e;
      }()),
      buffer1_(cfg.agent.replay_capacity), buffer2_(cfg.agent.replay_capacity) {
    cfg_.validate();
    const int state_dim = cfg_.env.num_slices();
    const int num_actions = static_cast<int>(action_count(cfg_.env.units, state_dim));
    agent1_ = std::make_unique<agents::DqnAgent>(state_dim, num_actions, cfg_.agent,
                                                 Rng::derive_seed(cfg_.seed, kAgent1));
    if (cfg_.orchestrator.twin_enabled) {
        agent2_ = std::make_unique<agents::DqnAgent>(state_dim, num_actions, cfg_.agent,
                                                     Rng::derive_seed(cfg_.seed, kAgent2));
        agent2_->copy_learner_state_from(*agent1_); // theta2 starts equal to theta1
        twin_ = std::make_unique<twin::Twin>(state_dim, cfg_.twin, Rng::derive_seed(cfg_.seed, kTwin));
    }
    env_.reset(Rng::derive_seed(cfg_.seed, kEnv));
}

agents::DqnAgent &Orchestrator::agent2() {
    if (!agent2_)
        throw StateError("Orchestrator: agent 2 exists only in twin-enabled mode");
    return *agent2_;
}

twin::Twin &Orchestrator::twin_model() {
    if (!twin_)
        throw StateError("Orchestrator: twin exists only in twin-enabled mode");
    return *twin_;
}

void Orchestrator::record_real_step(const Eigen::VectorXd &obs, int action, const env::StepOutcome &out) {
    io::StepRecord rec;
    rec.t = env_.real_steps() - 1;
    rec.obs = to_std(obs);
    rec.action_index = action;
    rec.alloc = env_.last_alloc_units();
    rec.se = out.se;
    rec.ssr = to_std(out.ssr);
    rec.utility = out.utility;
    rec.reward = out.reward;
    steps_.push_back(std::move(rec));
    twin_counts_.push_back(ledger_.twin_steps);
    ledger_.real_steps += 1;
}

twin::TwinDataset Orchestrator::collect_data(int count, bool uniform_policy) {
    if (count <= 0)
        throw std::invalid_argument("collect_data: count must be positive");
    PhaseTimer timer(ledger_, "collect");
    twin::TwinDataset ds;
    ds.begin_episode();
    for (int i = 0; i < count; ++i) {
        const Eigen::VectorXd obs = env_.current_obs().normalized;
        const double xi = uniform_policy ? 1.0 : agent1_->explore_rate(env_.real_steps());
        const int action = agent1_->select_action(obs, xi);
        const env::StepOutcome out = env_.step(action);
        ds.add(obs, alloc_fractions(env_.last_alloc_units(), cfg_.env.units), out.reward, out.next_obs.normalized);
        // Collected experience is real experience: it also feeds agent 1's replay.
        buffer1_.push({obs, action, out.reward, out.next_obs.normalized});
        record_real_step(obs, action, out);
    }
    return ds;
}

void train_agent_in_twin(agents::DqnAgent &agent, twin::TwinSession &session, agents::ReplayBuffer &buffer, int steps,
                         double eps_twin, RunLedger *ledger) {
    for (int k = 0; k < steps; ++k) {
        const Eigen::VectorXd s = session.current();
        const int action = agent.select_action(s, eps_twin);
        const auto [s_next, reward] = session.step(action);
        buffer.push({s, action, reward, s_next});
        if (ledger)
            ledger->twin_steps += 1;
        if (buffer.size() >= static_cast<std::size_t>(agent.config().batch_size))
            agent.train_step(buffer);
    }
}

void Orchestrator::train_agent2_in_twin(twin::TwinSession &session, int count) {
    if (!twin_ || !twin_->calibrated())
        throw StateError("train_agent2_in_twin: twin has not been calibrated");
    PhaseTimer timer(ledger_, "twin_rollout");
    train_agent_in_twin(*agent2_, session, buffer2_, count, cfg_.orchestrator.eps_twin, &ledger_);
}

void Orchestrator::train_agent_real(int count) {
    PhaseTimer timer(ledger_, "real");
    for (int i = 0; i < count; ++i) {
        const Eigen::VectorXd obs = env_.current_obs().normalized;
        const double xi = agent1_->explore_rate(env_.real_steps());
        const int action = agent1_->select_action(obs, xi);
        const env::StepOutcome out = env_.step(action);
        buffer1_.push({obs, action, out.reward, out.next_obs.normalized});
        record_real_step(obs, action, out);
        if (buffer1_.size() >= static_cast<std::size_t>(cfg_.agent.batch_size))
            agent1_->train_step(buffer1_);
    }
}

RunResult Orchestrator::run_algorithm1() {
    steps_.clear();
    twin_counts_.clear();
    ledger_ = RunLedger{};

    const OrchestratorConfig &oc = cfg_.orchestrator;
    for (int iteration = 0; iteration < oc.outer_iterations; ++iteration) {
        outer_iteration_ = iteration;
        if (oc.twin_enabled) {
            twin::TwinDataset ds = collect_data(oc.collect_steps, /*uniform_policy=*/iteration == 0);
            ds.finalize_split(cfg_.twin.holdout_fraction,
                              Rng::derive_seed(cfg_.seed, kSplitBase + static_cast<std::uint64_t>(iteration)));
            {
                PhaseTimer timer(ledger_, "twin_fit");
                twin_->fit(ds);
            }
            std::vector<Eigen::VectorXd> seed_states;
            seed_states.reserve(ds.size());
            for (std::size_t i = 0; i < ds.size(); ++i)
                seed_states.push_back(ds.item(i).s);
            twin::TwinSession session(*twin_, std::move(seed_states), cfg_.env.units,
                                      Rng::derive_seed(cfg_.seed, kSessionBase + static_cast<std::uint64_t>(iteration)));
            session.reset();
            train_agent2_in_twin(session, oc.twin_steps);

            agent1_->set_flat_online(empower(agent1_->flat_online(), agent2_->flat_online(), oc.zeta));
        }
        train_agent_real(oc.real_steps);
        if (oc.twin_enabled)
            agent2_->copy_learner_state_from(*agent1_);
    }

    RunResult result;
    result.steps = steps_;
    result.twin_counts = twin_counts_;
    result.rounds = io::aggregate_rounds(steps_, cfg_.analysis.round_size, twin_counts_);
    result.final_obs = to_std(env_.current_obs().normalized);
    result.ledger = ledger_;
    return result;
}

RunResult run_baseline(const io::ExperimentConfig &cfg, std::unique_ptr<agents::DqnAgent> *agent_out) {
    // Independent straight-line trainer; run_algorithm1 with the twin disabled
    // must reproduce it exactly.
    env::EnvConfig env_cfg = cfg.env;
    env_cfg.validate();
    env::SlicingEnv env(env_cfg);
    const int state_dim = cfg.env.num_slices();
    const int num_actions = static_cast<int>(action_count(cfg.env.units, state_dim));
    auto agent_ptr = std::make_unique<agents::DqnAgent>(state_dim, num_actions, cfg.agent,
                                                        Rng::derive_seed(cfg.seed, kAgent1));
    agents::DqnAgent &agent = *agent_ptr;
    agents::ReplayBuffer buffer(cfg.agent.replay_capacity);
    env.reset(Rng::derive_seed(cfg.seed, kEnv));

    RunResult result;
    const long total = static_cast<long>(cfg.orchestrator.outer_iterations) * cfg.orchestrator.real_steps;
    for (long i = 0; i < total; ++i) {
        const Eigen::VectorXd obs = env.current_obs().normalized;
        const double xi = agent.explore_rate(env.real_steps());
        const int action = agent.select_action(obs, xi);
        const env::StepOutcome out = env.step(action);
        buffer.push({obs, action, out.reward, out.next_obs.normalized});

        io::StepRecord rec;
        rec.t = env.real_steps() - 1;
        rec.obs = to_std(obs);
        rec.action_index = action;
        rec.alloc = env.last_alloc_units();
        rec.se = out.se;
        rec.ssr = to_std(out.ssr);
        rec.utility = out.utility;
        rec.reward = out.reward;
        result.steps.push_back(std::move(rec));
        result.twin_counts.push_back(0);
        result.ledger.real_steps += 1;

        if (buffer.size() >= static_cast<std::size_t>(cfg.agent.batch_size))
            agent.train_step(buffer);
    }
    result.rounds = io::aggregate_rounds(result.steps, cfg.analysis.round_size, result.twin_counts);
    result.final_obs = to_std(env.current_obs().normalized);
    if (agent_out)
        *agent_out = std::move(agent_ptr);
    return result;
}

EvalResult evaluate_greedy(const io::ExperimentConfig &cfg, const nn::MlpSpec &spec, const nn::ParamSet &params,
                           int num_steps, std::uint64_t env_seed) {
    env::EnvConfig env_cfg = cfg.env;
    env::SlicingEnv env(env_cfg);
    env.reset(env_seed);
    EvalResult result;
    for (int i = 0; i < num_steps; ++i) {
        const Eigen::VectorXd obs = env.current_obs().normalized;
        const nn::Matrix q = nn::mlp_forward(params, spec, obs.transpose());
        const int action = agents::argmax_lowest(q.row(0).transpose());
        const env::StepOutcome out = env.step(action);
        io::StepRecord rec;
        rec.t = i;
        rec.obs = to_std(obs);
        rec.action_index = action;
        rec.alloc = env.last_alloc_units();
        rec.se = out.se;
        rec.ssr = to_std(out.ssr);
        rec.utility = out.utility;
        rec.reward = out.reward;
        result.steps.push_back(std::move(rec));
        result.mean_utility += out.utility;
        result.mean_reward += out.reward;
    }
    if (num_steps > 0) {
        result.mean_utility /= static_cast<double>(num_steps);
        result.mean_reward /= static_cast<double>(num_steps);
    }
    return result;
}

EvalResult evaluate_random(const io::ExperimentConfig &cfg, int num_steps, std::uint64_t env_seed,
                           std::uint64_t policy_seed) {
    env::EnvConfig env_cfg = cfg.env;
    env::SlicingEnv env(env_cfg);
    env.reset(env_seed);
    Rng rng(policy_seed);
    const std::uint64_t num_actions = action_count(cfg.env.units, cfg.env.num_slices());
    EvalResult result;
    for (int i = 0; i < num_steps; ++i) {
        const Eigen::VectorXd obs = env.current_obs().normalized;
        const int action = static_cast<int>(rng.uniform_index(num_actions));
        const env::StepOutcome out = env.step(action);
        io::StepRecord rec;
        rec.t = i;
        rec.obs = to_std(obs);
        rec.action_index = action;
        rec.alloc = env.last_alloc_units();
        rec.se = out.se;
        rec.ssr = to_std(out.ssr);
        rec.utility = out.utility;
        rec.reward = out.reward;
        result.steps.push_back(std::move(rec));
        result.mean_utility += out.utility;
        result.mean_reward += out.reward;
    }
    if (num_steps > 0) {
        result.mean_utility /= static_cast<double>(num_steps);
        result.mean_reward /= static_cast<double>(num_steps);
    }
    return result;
}

} // namespace dtslice::orch
