#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace dtslice::env {

struct ArrivalSpec {
    enum class Kind { Uniform, TruncatedExponential, Exponential };
    Kind kind = Kind::Uniform;
    // Uniform: integer count in [low, high].
    long low = 0;
    long high = 0;
    // Exponential families: mean of the underlying draw; TruncatedExponential
    // additionally clips the draw at cap before rounding.
    double mean = 0.0;
    double cap = 0.0;

    double expected_count() const;
};

// Per-service SLA, traffic model, and utility weight.
struct SliceSpec {
    std::string name;
    double rate_sla_bps = 0.0;
    double latency_sla_s = 0.0;
    ArrivalSpec arrivals;
    double packet_bits = 0.0;
    double beta = 1.0;

    void validate() const;
};

struct EnvConfig {
    std::vector<SliceSpec> slices;
    double total_bandwidth_hz = 20e6;
    int units = 100; // allocation units; one unit = total_bandwidth_hz / units
    std::vector<int> users_per_slice;
    double cell_radius_m = 40.0;
    double min_distance_m = 1.0;
    double tx_power_w = 1.0;              // 30 dBm
    double noise_psd_w_hz = 3.9810717055349695e-21; // -174 dBm/Hz
    int slots_per_step = 400;
    double slot_duration_s = 0.5e-3;
    double alpha = 0.01;
    double gamma_min = 1.0;
    double gamma_max = 2.0;
    double sigma = 0.002;
    long backlog_cap = 30;               // carried packets per slice
    std::vector<double> norm_scale;      // empty -> 3 * arrival mean + backlog_cap
    bool natural_log_rates = false;
    std::uint64_t seed = 1;

    int num_slices() const { return static_cast<int>(slices.size()); }
    double window_s() const { return slots_per_step * slot_duration_s; }
    double unit_hz() const { return total_bandwidth_hz / units; }
    std::vector<double> effective_norm_scale() const;
    void validate() const;
};

struct PacketRecord {
    int slice = 0;
    int user = 0;
    double arrival_s = 0.0;
    double size_bits = 0.0;
    double remaining_bits = 0.0;
    double delivered_s = -1.0; // < 0 means not delivered within the window
    bool success = false;
    double min_serving_rate = 0.0; // slowest rate among slots that carried its bits

    bool delivered() const { return delivered_s >= 0.0; }
};

struct Observation {
    std::vector<long> demand;   // packets pending per slice for the coming window
    Eigen::VectorXd normalized; // clip(demand / norm_scale, 0, 1)
};

struct StepOutcome {
    double se = 0.0;
    Eigen::VectorXd ssr;
    double utility = 0.0;
    double reward = 0.0;
    Observation next_obs;
};

} // namespace dtslice::env
