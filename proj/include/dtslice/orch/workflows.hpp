#pragma once

#include "dtslice/io/config.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace dtslice::orch {

// End-to-end command bodies shared by the CLI and the Python bindings. Every
// workflow writes its artifacts (effective config, metrics, transition log,
// checkpoints, ledger) into cfg.io.out_dir and returns a summary document.

// Twin-enhanced or baseline training, per cfg.orchestrator.twin_enabled.
nlohmann::json train_workflow(const io::ExperimentConfig &cfg);

// Rolls a policy in the real environment and logs the transitions.
// policy: "random", or "ckpt" with the checkpoint path (greedy actions).
nlohmann::json collect_workflow(const io::ExperimentConfig &cfg, long steps, const std::string &policy,
                                const std::string &ckpt_path);

// Offline training on a fixed transition log, optionally twin-enhanced, then
// a greedy evaluation of the trained agent.
nlohmann::json offline_workflow(const io::ExperimentConfig &cfg, const std::string &dataset_path, double upsilon,
                                bool twin_enhanced);

// Distills a teacher checkpoint into a small student and evaluates both the
// agreement and the student's greedy utility.
nlohmann::json distill_workflow(const io::ExperimentConfig &cfg, const std::string &teacher_path,
                                const std::string &data_path, const std::vector<int> &hidden, long budget);

// TD-loss scan along the normalized gradient direction at a checkpoint.
nlohmann::json landscape_workflow(const io::ExperimentConfig &cfg, const std::string &ckpt_path,
                                  const std::string &data_path, double lambda_min, double lambda_max, int points,
                                  int batch_size);

} // namespace dtslice::orch
