#pragma once

#include "dtslice/env/simulator.hpp"
#include "dtslice/env/types.hpp"
#include "dtslice/rng.hpp"

#include <vector>

namespace dtslice::env {

// Seeded slicing environment. One step serves the currently pending traffic
// (fresh arrivals plus carried-over backlog) under the decoded bandwidth
// split, then rolls the next window. The task is continuing: there is no
// terminal state, and the reward-threshold counter keeps growing across the
// whole run.
class SlicingEnv {
public:
    explicit SlicingEnv(EnvConfig cfg);

    Observation reset();                  // uses config seed
    Observation reset(std::uint64_t seed);

    StepOutcome step(int action_index);

    int num_actions() const;
    int num_slices() const { return cfg_.num_slices(); }
    const EnvConfig &config() const { return cfg_; }

    // Real-environment interaction counter; also drives the reward threshold.
    long real_steps() const { return t_; }

    const Observation &current_obs() const;
    const std::vector<int> &last_alloc_units() const { return last_alloc_units_; }

private:
    void place_users();
    void roll_window(std::vector<PacketRecord> carried);
    Observation make_observation() const;

    EnvConfig cfg_;
    Rng rng_;
    bool initialized_ = false;
    long t_ = 0;
    std::vector<std::vector<double>> user_gain_; // path-loss gain per slice/user
    std::vector<PacketRecord> pending_;
    Observation obs_;
    std::vector<double> norm_scale_;
    std::vector<int> last_alloc_units_;
};

} // namespace dtslice::env
