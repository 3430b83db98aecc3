#pragma once

#include <string>
#include <vector>

namespace dtslice::io {

// One real-environment interaction, as written to transition logs:
// {t, obs[N], action_index, alloc[N], se, ssr[N], utility, reward} per line.
struct StepRecord {
    long t = 0;
    std::vector<double> obs; // normalized observation the policy acted on
    int action_index = 0;
    std::vector<int> alloc; // allocation units per slice
    double se = 0.0;
    std::vector<double> ssr;
    double utility = 0.0;
    double reward = 0.0;
};

// Round aggregate: means over one block of real interactions.
struct MetricsRow {
    long round = 0;
    double mean_reward = 0.0;
    double mean_utility = 0.0;
    double mean_se = 0.0;
    std::vector<double> mean_ssr;
    long cum_real = 0;
    long cum_twin = 0;
};

// Arithmetic means over consecutive blocks of round_size steps; a trailing
// partial block is dropped. twin_counts, when given, holds the cumulative twin
// interaction count at each real step (same length as steps).
std::vector<MetricsRow> aggregate_rounds(const std::vector<StepRecord> &steps, int round_size,
                                         const std::vector<long> &twin_counts = {});

} // namespace dtslice::io
