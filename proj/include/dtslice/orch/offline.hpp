#pragma once

#include "dtslice/agents/agent.hpp"
#include "dtslice/orch/config.hpp"

#include <vector>

namespace dtslice::orch {

struct OfflineResult {
    std::vector<double> epoch_loss; // mean pre-update loss per dataset traversal
    long updates = 0;
};

// Batch value learning on a fixed transition dataset. Each epoch shuffles the
// dataset and applies one TD update per minibatch; with upsilon > 0 every
// update additionally pulls the online parameters toward theta2_ref through
// the proximal penalty (upsilon/2) * ||theta - theta2_ref||^2. Performs no
// environment interaction whatsoever. Pass an empty theta2_ref to regularize
// toward zero (twin-disabled mode keeps upsilon = 0 so the term vanishes).
OfflineResult run_offline(agents::DqnAgent &agent, const std::vector<agents::Transition> &dataset,
                          const nn::Vector &theta2_ref, double upsilon, int batch_size, int epochs,
                          std::uint64_t shuffle_seed);

} // namespace dtslice::orch
