#pragma once

#include <vector>

namespace dtslice::orch {

// Knobs of the two-loop training procedure and its offline/distillation
// derivatives. Defaults are desk-scale: a full run finishes in minutes.
struct OrchestratorConfig {
    int outer_iterations = 20; // outer loop count
    int twin_steps = 2000;     // agent-2 interactions with the twin per iteration
    int real_steps = 200;      // agent-1 real-environment training steps per iteration
    int collect_steps = 400;   // logged transitions gathered per iteration
    double zeta = 0.3;         // empowerment blend weight on agent 1
    double eps_twin = 0.05;    // exploration inside the twin (0 = pure greedy)
    bool twin_enabled = true;

    // Offline variant.
    double upsilon = 0.0; // proximal penalty weight
    int offline_batch = 64;
    int offline_epochs = 200;

    // Distillation.
    int distill_pool = 2000;
    long distill_budget = 10000;
    std::vector<int> student_hidden = {16, 16};

    int eval_rounds = 20; // greedy evaluation length, in rounds

    void validate() const;
};

} // namespace dtslice::orch
