#pragma once

#include "dtslice/agents/agent.hpp"
#include "dtslice/nn/paramset.hpp"
#include "dtslice/twin/twin.hpp"

#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <utility>

namespace dtslice::io {

inline constexpr int kCheckpointFormatVersion = 1;

nlohmann::json paramset_to_json(const nn::ParamSet &params);
nn::ParamSet paramset_from_json(const nlohmann::json &j);

// Full agent state: architecture, online/target parameters, optimizer
// moments, counters, and the generator state. save -> load -> save is
// byte-identical; loading validates the format version and tensor shapes.
void save_agent_checkpoint(const std::string &path, const agents::DqnAgent &agent);
std::unique_ptr<agents::DqnAgent> load_agent_checkpoint(const std::string &path);

void save_twin_checkpoint(const std::string &path, const twin::Twin &twin);
std::unique_ptr<twin::Twin> load_twin_checkpoint(const std::string &path);

// Bare greedy policy network (distilled students).
void save_policy_checkpoint(const std::string &path, const nn::MlpSpec &spec, const nn::ParamSet &params);
std::pair<nn::MlpSpec, nn::ParamSet> load_policy_checkpoint(const std::string &path);

} // namespace dtslice::io
