#pragma once

#include "dtslice/agents/replay_buffer.hpp"
#include "dtslice/io/metrics.hpp"
#include "dtslice/twin/dataset.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace dtslice::io {

// Transition logs are line-delimited JSON with one StepRecord per executed
// step. Each episode (contiguous trajectory) ends with a trailing observation
// row carrying action_index = -1, which supplies the final next-state and
// separates episodes when files are concatenated.
struct TransitionLog {
    struct Episode {
        std::vector<StepRecord> steps;
        std::vector<double> final_obs; // observation after the last step
    };
    std::vector<Episode> episodes;

    std::size_t total_steps() const;
};

nlohmann::json step_record_to_json(const StepRecord &r);
StepRecord step_record_from_json(const nlohmann::json &j);

void save_transition_log(const std::string &path, const TransitionLog &log);
TransitionLog read_transition_log(const std::string &path);

// (s, a, r, s') tuples; within an episode the next state comes from the
// following row, the last one from the trailing observation row.
std::vector<agents::Transition> log_to_transitions(const TransitionLog &log);

// Twin training set; allocations become fractions of the `units` total.
twin::TwinDataset log_to_twin_dataset(const TransitionLog &log, int units);

// Every pre-action observation in the log.
std::vector<Eigen::VectorXd> log_states(const TransitionLog &log);

void save_metrics_jsonl(const std::string &path, const std::vector<MetricsRow> &rows);
std::vector<MetricsRow> read_metrics_jsonl(const std::string &path);

} // namespace dtslice::io
