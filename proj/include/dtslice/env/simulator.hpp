#pragma once

#include "dtslice/env/types.hpp"

#include <functional>
#include <vector>

namespace dtslice::env {

// Channel gain seen by (slice, user) during a slot. Called once per scheduled
// transmission, so generator-backed samplers draw in schedule order.
using ChannelSampler = std::function<double(int slice, int user, int slot)>;

struct WindowResult {
    std::vector<PacketRecord> records;   // every presented packet, with outcomes
    Eigen::VectorXd slice_rate_time_avg; // per-slice mean scheduled rate over the window (bits/s)
};

// Serves one step window: per slice, users holding pending traffic are
// scheduled round-robin, one user per slot, transmitting at the Shannon rate
// of their slot gain on the slice's bandwidth. Packets drain FIFO per user;
// partially sent packets keep their residual bits across slots. A packet is
// successful when it completes within its slice's latency SLA and every slot
// that carried its bits ran at or above the rate SLA.
WindowResult simulate_window(const std::vector<double> &alloc_hz, std::vector<PacketRecord> packets,
                             const ChannelSampler &channel, const EnvConfig &cfg);

struct Metrics {
    double se = 0.0;
    Eigen::VectorXd ssr;
    double utility = 0.0;
};

// Spectrum efficiency, per-slice SLA satisfaction (0/0 counts as fully
// satisfied), and the weighted utility alpha * se + sum_n beta_n * ssr_n.
Metrics compute_metrics(const std::vector<PacketRecord> &records, const Eigen::VectorXd &slice_rate_time_avg,
                        const EnvConfig &cfg);

// Thresholded reward: gamma_t = min(gamma_min + sigma * t, gamma_max);
// 0 below gamma_t, 1 in [gamma_t, gamma_max), 1 + (U - gamma_max)/2 above.
double shape_reward(double utility, long t, const EnvConfig &cfg);

} // namespace dtslice::env
