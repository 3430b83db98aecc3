#include "dtslice/env/environment.hpp"

#include "dtslice/action_codec.hpp"
#include "dtslice/env/channel.hpp"
#include "dtslice/env/traffic.hpp"
#include "dtslice/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dtslice::env {

SlicingEnv::SlicingEnv(EnvConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    norm_scale_ = cfg_.effective_norm_scale();
}

int SlicingEnv::num_actions() const {
    return static_cast<int>(action_count(cfg_.units, cfg_.num_slices()));
}

Observation SlicingEnv::reset() { return reset(cfg_.seed); }

Observation SlicingEnv::reset(std::uint64_t seed) {
    rng_ = Rng(seed);
    t_ = 0;
    initialized_ = true;
    last_alloc_units_.clear();
    place_users();
    pending_.clear();
    roll_window({});
    return obs_;
}

void SlicingEnv::place_users() {
    user_gain_.assign(static_cast<std::size_t>(cfg_.num_slices()), {});
    for (int n = 0; n < cfg_.num_slices(); ++n) {
        auto &gains = user_gain_[static_cast<std::size_t>(n)];
        gains.resize(static_cast<std::size_t>(cfg_.users_per_slice[static_cast<std::size_t>(n)]));
        for (double &g : gains) {
            // Uniform position in the cell disc; only the distance matters.
            const double d = std::max(cfg_.min_distance_m, cfg_.cell_radius_m * std::sqrt(rng_.uniform()));
            g = pathloss_gain(d);
        }
    }
}

void SlicingEnv::roll_window(std::vector<PacketRecord> carried) {
    pending_.clear();
    // Backlog re-enters at the window start with its residual bits, capped per slice
    // (oldest dropped first).
    std::vector<long> carried_count(static_cast<std::size_t>(cfg_.num_slices()), 0);
    for (const PacketRecord &p : carried)
        carried_count[static_cast<std::size_t>(p.slice)] += 1;
    std::vector<long> drop(static_cast<std::size_t>(cfg_.num_slices()), 0);
    for (int n = 0; n < cfg_.num_slices(); ++n)
        drop[static_cast<std::size_t>(n)] = std::max<long>(0, carried_count[static_cast<std::size_t>(n)] - cfg_.backlog_cap);
    for (PacketRecord &p : carried) {
        if (drop[static_cast<std::size_t>(p.slice)] > 0) {
            drop[static_cast<std::size_t>(p.slice)] -= 1;
            continue;
        }
        PacketRecord fresh;
        fresh.slice = p.slice;
        fresh.user = p.user;
        fresh.arrival_s = 0.0;
        fresh.size_bits = p.remaining_bits;
        pending_.push_back(fresh);
    }
    const double window = cfg_.window_s();
    for (int n = 0; n < cfg_.num_slices(); ++n) {
        const SliceSpec &spec = cfg_.slices[static_cast<std::size_t>(n)];
        const long count = sample_arrivals(spec, rng_);
        const int users = cfg_.users_per_slice[static_cast<std::size_t>(n)];
        for (long i = 0; i < count; ++i) {
            PacketRecord p;
            p.slice = n;
            p.user = static_cast<int>(rng_.uniform_index(static_cast<std::uint64_t>(users)));
            p.arrival_s = rng_.uniform(0.0, window);
            p.size_bits = spec.packet_bits;
            pending_.push_back(p);
        }
    }
    obs_ = make_observation();
}

Observation SlicingEnv::make_observation() const {
    Observation obs;
    obs.demand.assign(static_cast<std::size_t>(cfg_.num_slices()), 0);
    for (const PacketRecord &p : pending_)
        obs.demand[static_cast<std::size_t>(p.slice)] += 1;
    obs.normalized = Eigen::VectorXd(cfg_.num_slices());
    for (int n = 0; n < cfg_.num_slices(); ++n) {
        const double v = static_cast<double>(obs.demand[static_cast<std::size_t>(n)]) / norm_scale_[static_cast<std::size_t>(n)];
        obs.normalized(n) = std::clamp(v, 0.0, 1.0);
    }
    return obs;
}

const Observation &SlicingEnv::current_obs() const {
    if (!initialized_)
        throw StateError("SlicingEnv: reset() must be called first");
    return obs_;
}

StepOutcome SlicingEnv::step(int action_index) {
    if (!initialized_)
        throw StateError("SlicingEnv: step() before reset()");
    const std::vector<int> alloc_units =
        decode_action(static_cast<std::uint64_t>(action_index), cfg_.units, cfg_.num_slices());
    last_alloc_units_ = alloc_units;
    std::vector<double> alloc_hz(alloc_units.size());
    for (std::size_t i = 0; i < alloc_units.size(); ++i)
        alloc_hz[i] = alloc_units[i] * cfg_.unit_hz();

    ChannelSampler channel = [this](int slice, int user, int /*slot*/) {
        // Static path loss modulated by a unit-mean Rayleigh power fade, redrawn per slot.
        return user_gain_[static_cast<std::size_t>(slice)][static_cast<std::size_t>(user)] * rng_.exponential(1.0);
    };

    WindowResult window = simulate_window(alloc_hz, std::move(pending_), channel, cfg_);
    const Metrics metrics = compute_metrics(window.records, window.slice_rate_time_avg, cfg_);

    StepOutcome out;
    out.se = metrics.se;
    out.ssr = metrics.ssr;
    out.utility = metrics.utility;
    out.reward = shape_reward(metrics.utility, t_, cfg_);
    t_ += 1;

    std::vector<PacketRecord> carried;
    for (const PacketRecord &p : window.records)
        if (!p.delivered() && p.remaining_bits > 0.0)
            carried.push_back(p);
    roll_window(std::move(carried));
    out.next_obs = obs_;
    return out;
}

} // namespace dtslice::env
