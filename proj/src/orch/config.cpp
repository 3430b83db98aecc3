#include "dtslice/orch/config.hpp"

#include "dtslice/errors.hpp"

namespace dtslice::orch {

void OrchestratorConfig::validate() const {
    if (outer_iterations < 1)
        throw ConfigError("orchestrator: outer_iterations must be >= 1");
    if (twin_steps < 0 || real_steps < 0)
        throw ConfigError("orchestrator: step counts must be >= 0");
    if (collect_steps < 1)
        throw ConfigError("orchestrator: collect_steps must be >= 1");
    if (zeta < 0.0 || zeta > 1.0)
        throw ConfigError("orchestrator: zeta must lie in [0, 1]");
    if (eps_twin < 0.0 || eps_twin > 1.0)
        throw ConfigError("orchestrator: eps_twin must lie in [0, 1]");
    if (upsilon < 0.0)
        throw ConfigError("orchestrator: upsilon must be >= 0");
    if (offline_batch < 1 || offline_epochs < 0)
        throw ConfigError("orchestrator: offline_batch >= 1 and offline_epochs >= 0 required");
    if (distill_pool < 1 || distill_budget < 0)
        throw ConfigError("orchestrator: distill_pool >= 1 and distill_budget >= 0 required");
    for (int w : student_hidden)
        if (w < 1)
            throw ConfigError("orchestrator: student hidden widths must be >= 1");
    if (eval_rounds < 1)
        throw ConfigError("orchestrator: eval_rounds must be >= 1");
}

} // namespace dtslice::orch
