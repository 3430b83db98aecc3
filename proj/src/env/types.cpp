#include "dtslice/env/types.hpp"

#include "dtslice/errors.hpp"

#include <cmath>

namespace dtslice::env {

double ArrivalSpec::expected_count() const {
    switch (kind) {
    case Kind::Uniform:
        return 0.5 * static_cast<double>(low + high);
    case Kind::TruncatedExponential:
        // E[min(X, cap)] for X ~ Exp(mean).
        return mean <= 0.0 ? 0.0 : mean * (1.0 - std::exp(-cap / mean));
    case Kind::Exponential:
        return mean;
    }
    return 0.0;
}

void SliceSpec::validate() const {
    if (rate_sla_bps <= 0.0)
        throw ConfigError("slice '" + name + "': rate_sla_bps must be > 0");
    if (latency_sla_s < 0.0)
        throw ConfigError("slice '" + name + "': latency_sla_s must be >= 0");
    if (packet_bits <= 0.0)
        throw ConfigError("slice '" + name + "': packet_bits must be > 0");
    if (beta < 0.0)
        throw ConfigError("slice '" + name + "': beta must be >= 0");
    switch (arrivals.kind) {
    case ArrivalSpec::Kind::Uniform:
        if (arrivals.low < 0 || arrivals.high < arrivals.low)
            throw ConfigError("slice '" + name + "': uniform arrivals need 0 <= low <= high");
        break;
    case ArrivalSpec::Kind::TruncatedExponential:
        if (arrivals.mean < 0.0 || arrivals.cap < 0.0)
            throw ConfigError("slice '" + name + "': truncated exponential needs mean >= 0 and cap >= 0");
        break;
    case ArrivalSpec::Kind::Exponential:
        if (arrivals.mean < 0.0)
            throw ConfigError("slice '" + name + "': exponential needs mean >= 0");
        break;
    }
}

std::vector<double> EnvConfig::effective_norm_scale() const {
    if (!norm_scale.empty())
        return norm_scale;
    std::vector<double> scale;
    scale.reserve(slices.size());
    for (const SliceSpec &s : slices)
        scale.push_back(3.0 * s.arrivals.expected_count() + static_cast<double>(backlog_cap));
    return scale;
}

void EnvConfig::validate() const {
    if (slices.empty())
        throw ConfigError("env: at least one slice required");
    if (units < num_slices())
        throw ConfigError("env: units must be >= number of slices (every slice receives >= 1 unit)");
    if (total_bandwidth_hz <= 0.0)
        throw ConfigError("env: total_bandwidth_hz must be > 0");
    if (users_per_slice.size() != slices.size())
        throw ConfigError("env: users_per_slice must have one entry per slice");
    for (int u : users_per_slice)
        if (u < 1)
            throw ConfigError("env: every slice needs at least one user");
    if (slots_per_step < 1 || slot_duration_s <= 0.0)
        throw ConfigError("env: slots_per_step >= 1 and slot_duration_s > 0 required");
    if (gamma_min > gamma_max)
        throw ConfigError("env: gamma_min must be <= gamma_max");
    if (sigma < 0.0)
        throw ConfigError("env: sigma must be >= 0");
    if (tx_power_w < 0.0 || noise_psd_w_hz <= 0.0)
        throw ConfigError("env: tx_power_w >= 0 and noise_psd_w_hz > 0 required");
    if (min_distance_m <= 0.0 || cell_radius_m < min_distance_m)
        throw ConfigError("env: need 0 < min_distance_m <= cell_radius_m");
    if (backlog_cap < 0)
        throw ConfigError("env: backlog_cap must be >= 0");
    if (!norm_scale.empty() && norm_scale.size() != slices.size())
        throw ConfigError("env: norm_scale must have one entry per slice");
    for (double s : norm_scale)
        if (s <= 0.0)
            throw ConfigError("env: norm_scale entries must be > 0");
    for (const SliceSpec &s : slices)
        s.validate();
}

} // namespace dtslice::env
