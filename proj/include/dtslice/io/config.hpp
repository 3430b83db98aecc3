#pragma once

#include "dtslice/agents/agent.hpp"
#include "dtslice/env/types.hpp"
#include "dtslice/orch/config.hpp"
#include "dtslice/twin/twin.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace dtslice::io {

struct AnalysisConfig {
    int round_size = 200;
    double lambda_min = -1.0;
    double lambda_max = 1.0;
    int lambda_points = 41;
    int landscape_batch = 256;

    void validate() const;
};

struct IoConfig {
    std::string out_dir;
};

// Whole-experiment configuration: the six sections plus the master seed.
// Unknown keys anywhere are rejected; a fully-defaulted config is valid.
struct ExperimentConfig {
    std::uint64_t seed = 1;
    env::EnvConfig env;
    agents::AgentConfig agent;
    twin::TwinConfig twin;
    orch::OrchestratorConfig orchestrator;
    AnalysisConfig analysis;
    IoConfig io;

    void validate() const;
};

// Three-slice scenario (voice / video / low-latency) at 20 MHz with 200 kHz
// resolution; every field of every section has a default.
ExperimentConfig default_config();

ExperimentConfig config_from_json(const nlohmann::json &j);
ExperimentConfig load_config_file(const std::string &path);

// The fully merged, effective configuration (all defaults materialized).
nlohmann::json config_to_json(const ExperimentConfig &cfg);

} // namespace dtslice::io
