#include "dtslice/env/simulator.hpp"

#include "dtslice/env/channel.hpp"
#include "dtslice/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace dtslice::env {

WindowResult simulate_window(const std::vector<double> &alloc_hz, std::vector<PacketRecord> packets,
                             const ChannelSampler &channel, const EnvConfig &cfg) {
    const int n_slices = cfg.num_slices();
    if (static_cast<int>(alloc_hz.size()) != n_slices)
        throw std::invalid_argument("simulate_window: allocation length != slice count");
    double total = 0.0;
    for (double w : alloc_hz) {
        if (w <= 0.0)
            throw std::invalid_argument("simulate_window: every slice needs positive bandwidth");
        total += w;
    }
    if (std::abs(total - cfg.total_bandwidth_hz) > 1e-6 * cfg.total_bandwidth_hz)
        throw std::invalid_argument("simulate_window: allocation does not sum to the total bandwidth");

    WindowResult result;
    result.slice_rate_time_avg = Eigen::VectorXd::Zero(n_slices);

    // Per-slice, per-user FIFO queues of packet indices ordered by arrival.
    std::vector<std::vector<std::deque<std::size_t>>> queues(static_cast<std::size_t>(n_slices));
    for (int n = 0; n < n_slices; ++n)
        queues[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(cfg.users_per_slice[static_cast<std::size_t>(n)]));

    std::vector<std::size_t> order(packets.size());
    for (std::size_t i = 0; i < packets.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return packets[a].arrival_s < packets[b].arrival_s; });
    for (std::size_t i : order) {
        PacketRecord &p = packets[i];
        p.remaining_bits = p.size_bits;
        p.delivered_s = -1.0;
        p.success = false;
        p.min_serving_rate = std::numeric_limits<double>::infinity();
        queues[static_cast<std::size_t>(p.slice)][static_cast<std::size_t>(p.user)].push_back(i);
    }

    std::vector<int> rr_pointer(static_cast<std::size_t>(n_slices), 0);

    for (int slot = 0; slot < cfg.slots_per_step; ++slot) {
        const double slot_start = slot * cfg.slot_duration_s;
        for (int n = 0; n < n_slices; ++n) {
            auto &slice_queues = queues[static_cast<std::size_t>(n)];
            const int users = static_cast<int>(slice_queues.size());

            // Next user (round-robin) whose head packet has already arrived.
            int chosen = -1;
            for (int probe = 0; probe < users; ++probe) {
                const int u = (rr_pointer[static_cast<std::size_t>(n)] + probe) % users;
                auto &q = slice_queues[static_cast<std::size_t>(u)];
                if (!q.empty() && packets[q.front()].arrival_s <= slot_start) {
                    chosen = u;
                    break;
                }
            }
            if (chosen < 0)
                continue;
            rr_pointer[static_cast<std::size_t>(n)] = (chosen + 1) % users;

            const double gain = channel(n, chosen, slot);
            const double snr = compute_snr(gain, cfg.tx_power_w, cfg.noise_psd_w_hz, alloc_hz[static_cast<std::size_t>(n)]);
            const double rate = compute_user_rate(alloc_hz[static_cast<std::size_t>(n)], snr, cfg.natural_log_rates);
            if (rate <= 0.0)
                continue;

            auto &q = slice_queues[static_cast<std::size_t>(chosen)];
            double budget = rate * cfg.slot_duration_s;
            double used_bits = 0.0;
            while (budget > 0.0 && !q.empty() && packets[q.front()].arrival_s <= slot_start) {
                PacketRecord &p = packets[q.front()];
                const double sent = std::min(p.remaining_bits, budget);
                p.remaining_bits -= sent;
                budget -= sent;
                used_bits += sent;
                p.min_serving_rate = std::min(p.min_serving_rate, rate);
                if (p.remaining_bits <= 0.0) {
                    p.delivered_s = slot_start + used_bits / rate;
                    q.pop_front();
                } else {
                    break; // budget exhausted mid-packet
                }
            }
            const double used_fraction = used_bits / (rate * cfg.slot_duration_s);
            result.slice_rate_time_avg(n) += rate * used_fraction;
        }
    }
    result.slice_rate_time_avg /= static_cast<double>(cfg.slots_per_step);

    for (PacketRecord &p : packets) {
        const SliceSpec &spec = cfg.slices[static_cast<std::size_t>(p.slice)];
        p.success = p.delivered() && (p.delivered_s - p.arrival_s) <= spec.latency_sla_s &&
                    p.min_serving_rate >= spec.rate_sla_bps;
    }
    result.records = std::move(packets);
    return result;
}

Metrics compute_metrics(const std::vector<PacketRecord> &records, const Eigen::VectorXd &slice_rate_time_avg,
                        const EnvConfig &cfg) {
    const int n_slices = cfg.num_slices();
    Eigen::VectorXd arrived = Eigen::VectorXd::Zero(n_slices);
    Eigen::VectorXd succeeded = Eigen::VectorXd::Zero(n_slices);
    for (const PacketRecord &p : records) {
        arrived(p.slice) += 1.0;
        if (p.success)
            succeeded(p.slice) += 1.0;
    }
    Metrics m;
    m.ssr = Eigen::VectorXd::Ones(n_slices);
    for (int n = 0; n < n_slices; ++n)
        if (arrived(n) > 0.0)
            m.ssr(n) = succeeded(n) / arrived(n);
    m.se = slice_rate_time_avg.sum() / cfg.total_bandwidth_hz;
    double weighted = 0.0;
    for (int n = 0; n < n_slices; ++n)
        weighted += cfg.slices[static_cast<std::size_t>(n)].beta * m.ssr(n);
    m.utility = cfg.alpha * m.se + weighted;
    return m;
}

double shape_reward(double utility, long t, const EnvConfig &cfg) {
    const double gamma_t = std::min(cfg.gamma_min + cfg.sigma * static_cast<double>(t), cfg.gamma_max);
    if (utility < gamma_t)
        return 0.0;
    if (utility < cfg.gamma_max)
        return 1.0;
    return 1.0 + (utility - cfg.gamma_max) / 2.0;
}

} // namespace dtslice::env
