#include "dtslice/io/config.hpp"

#include "dtslice/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace dtslice::io {

using nlohmann::json;

namespace {

void require_keys(const json &obj, const std::string &section, const std::set<std::string> &allowed) {
    if (!obj.is_object())
        throw ConfigError("config section '" + section + "' must be an object");
    for (const auto &[key, value] : obj.items())
        if (!allowed.count(key))
            throw ConfigError("unknown key '" + key + "' in config section '" + section + "'");
}

template <typename T> void read(const json &obj, const char *key, T &out) {
    if (obj.contains(key))
        out = obj.at(key).get<T>();
}

env::ArrivalSpec arrivals_from_json(const json &j, const std::string &slice_name) {
    require_keys(j, "env.slices[" + slice_name + "].arrivals", {"kind", "low", "high", "mean", "cap"});
    env::ArrivalSpec a;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "uniform")
        a.kind = env::ArrivalSpec::Kind::Uniform;
    else if (kind == "truncated_exponential")
        a.kind = env::ArrivalSpec::Kind::TruncatedExponential;
    else if (kind == "exponential")
        a.kind = env::ArrivalSpec::Kind::Exponential;
    else
        throw ConfigError("slice '" + slice_name + "': unknown arrival kind '" + kind + "'");
    read(j, "low", a.low);
    read(j, "high", a.high);
    read(j, "mean", a.mean);
    read(j, "cap", a.cap);
    return a;
}

json arrivals_to_json(const env::ArrivalSpec &a) {
    json j;
    switch (a.kind) {
    case env::ArrivalSpec::Kind::Uniform:
        j["kind"] = "uniform";
        j["low"] = a.low;
        j["high"] = a.high;
        break;
    case env::ArrivalSpec::Kind::TruncatedExponential:
        j["kind"] = "truncated_exponential";
        j["mean"] = a.mean;
        j["cap"] = a.cap;
        break;
    case env::ArrivalSpec::Kind::Exponential:
        j["kind"] = "exponential";
        j["mean"] = a.mean;
        break;
    }
    return j;
}

env::SliceSpec slice_from_json(const json &j) {
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "slice";
    require_keys(j, "env.slices[" + name + "]",
                 {"name", "rate_sla_bps", "latency_sla_s", "packet_bits", "beta", "arrivals"});
    env::SliceSpec s;
    s.name = name;
    read(j, "rate_sla_bps", s.rate_sla_bps);
    read(j, "latency_sla_s", s.latency_sla_s);
    read(j, "packet_bits", s.packet_bits);
    read(j, "beta", s.beta);
    if (j.contains("arrivals"))
        s.arrivals = arrivals_from_json(j.at("arrivals"), name);
    return s;
}

void env_from_json(const json &j, env::EnvConfig &cfg) {
    require_keys(j, "env",
                 {"slices", "total_bandwidth_hz", "units", "resolution_hz", "users_per_slice", "cell_radius_m",
                  "min_distance_m", "tx_power_w", "noise_psd_w_hz", "slots_per_step", "slot_duration_s", "alpha",
                  "gamma_min", "gamma_max", "sigma", "backlog_cap", "norm_scale", "natural_log_rates"});
    if (j.contains("slices")) {
        cfg.slices.clear();
        for (const json &s : j.at("slices"))
            cfg.slices.push_back(slice_from_json(s));
    }
    read(j, "total_bandwidth_hz", cfg.total_bandwidth_hz);
    if (j.contains("units") && j.contains("resolution_hz"))
        throw ConfigError("env: give either 'units' or 'resolution_hz', not both");
    if (j.contains("units"))
        cfg.units = j.at("units").get<int>();
    else if (j.contains("resolution_hz")) {
        const double res = j.at("resolution_hz").get<double>();
        if (res <= 0.0)
            throw ConfigError("env: resolution_hz must be > 0");
        cfg.units = static_cast<int>(std::llround(cfg.total_bandwidth_hz / res));
    }
    read(j, "users_per_slice", cfg.users_per_slice);
    read(j, "cell_radius_m", cfg.cell_radius_m);
    read(j, "min_distance_m", cfg.min_distance_m);
    read(j, "tx_power_w", cfg.tx_power_w);
    read(j, "noise_psd_w_hz", cfg.noise_psd_w_hz);
    read(j, "slots_per_step", cfg.slots_per_step);
    read(j, "slot_duration_s", cfg.slot_duration_s);
    read(j, "alpha", cfg.alpha);
    read(j, "gamma_min", cfg.gamma_min);
    read(j, "gamma_max", cfg.gamma_max);
    read(j, "sigma", cfg.sigma);
    read(j, "backlog_cap", cfg.backlog_cap);
    read(j, "norm_scale", cfg.norm_scale);
    read(j, "natural_log_rates", cfg.natural_log_rates);
}

json env_to_json(const env::EnvConfig &cfg) {
    json j;
    json slices = json::array();
    for (const env::SliceSpec &s : cfg.slices) {
        json js;
        js["name"] = s.name;
        js["rate_sla_bps"] = s.rate_sla_bps;
        js["latency_sla_s"] = s.latency_sla_s;
        js["packet_bits"] = s.packet_bits;
        js["beta"] = s.beta;
        js["arrivals"] = arrivals_to_json(s.arrivals);
        slices.push_back(js);
    }
    j["slices"] = slices;
    j["total_bandwidth_hz"] = cfg.total_bandwidth_hz;
    j["units"] = cfg.units;
    j["users_per_slice"] = cfg.users_per_slice;
    j["cell_radius_m"] = cfg.cell_radius_m;
    j["min_distance_m"] = cfg.min_distance_m;
    j["tx_power_w"] = cfg.tx_power_w;
    j["noise_psd_w_hz"] = cfg.noise_psd_w_hz;
    j["slots_per_step"] = cfg.slots_per_step;
    j["slot_duration_s"] = cfg.slot_duration_s;
    j["alpha"] = cfg.alpha;
    j["gamma_min"] = cfg.gamma_min;
    j["gamma_max"] = cfg.gamma_max;
    j["sigma"] = cfg.sigma;
    j["backlog_cap"] = cfg.backlog_cap;
    j["norm_scale"] = cfg.norm_scale;
    j["natural_log_rates"] = cfg.natural_log_rates;
    return j;
}

void agent_from_json(const json &j, agents::AgentConfig &cfg) {
    require_keys(j, "agent",
                 {"algo", "discount", "explore_start", "explore_end", "explore_decay_steps", "replay_capacity",
                  "batch_size", "target_sync_period", "lr", "hidden_widths"});
    if (j.contains("algo"))
        cfg.algo = agents::algo_from_string(j.at("algo").get<std::string>());
    read(j, "discount", cfg.discount);
    read(j, "explore_start", cfg.explore_start);
    read(j, "explore_end", cfg.explore_end);
    read(j, "explore_decay_steps", cfg.explore_decay_steps);
    read(j, "replay_capacity", cfg.replay_capacity);
    read(j, "batch_size", cfg.batch_size);
    read(j, "target_sync_period", cfg.target_sync_period);
    read(j, "lr", cfg.lr);
    read(j, "hidden_widths", cfg.hidden_widths);
}

json agent_to_json(const agents::AgentConfig &cfg) {
    json j;
    j["algo"] = agents::algo_to_string(cfg.algo);
    j["discount"] = cfg.discount;
    j["explore_start"] = cfg.explore_start;
    j["explore_end"] = cfg.explore_end;
    j["explore_decay_steps"] = cfg.explore_decay_steps;
    j["replay_capacity"] = cfg.replay_capacity;
    j["batch_size"] = cfg.batch_size;
    j["target_sync_period"] = cfg.target_sync_period;
    j["lr"] = cfg.lr;
    j["hidden_widths"] = cfg.hidden_widths;
    return j;
}

void twin_from_json(const json &j, twin::TwinConfig &cfg) {
    require_keys(j, "twin",
                 {"lstm_hidden", "window", "epochs", "lr", "batch_size", "rollout_reset_period", "reward_hidden",
                  "holdout_fraction"});
    read(j, "lstm_hidden", cfg.lstm_hidden);
    read(j, "window", cfg.window);
    read(j, "epochs", cfg.epochs);
    read(j, "lr", cfg.lr);
    read(j, "batch_size", cfg.batch_size);
    read(j, "rollout_reset_period", cfg.rollout_reset_period);
    read(j, "reward_hidden", cfg.reward_hidden);
    read(j, "holdout_fraction", cfg.holdout_fraction);
}

json twin_to_json(const twin::TwinConfig &cfg) {
    json j;
    j["lstm_hidden"] = cfg.lstm_hidden;
    j["window"] = cfg.window;
    j["epochs"] = cfg.epochs;
    j["lr"] = cfg.lr;
    j["batch_size"] = cfg.batch_size;
    j["rollout_reset_period"] = cfg.rollout_reset_period;
    j["reward_hidden"] = cfg.reward_hidden;
    j["holdout_fraction"] = cfg.holdout_fraction;
    return j;
}

void orch_from_json(const json &j, orch::OrchestratorConfig &cfg) {
    require_keys(j, "orchestrator",
                 {"outer_iterations", "twin_steps", "real_steps", "collect_steps", "zeta", "eps_twin", "twin_enabled",
                  "upsilon", "offline_batch", "offline_epochs", "distill_pool", "distill_budget", "student_hidden",
                  "eval_rounds"});
    read(j, "outer_iterations", cfg.outer_iterations);
    read(j, "twin_steps", cfg.twin_steps);
    read(j, "real_steps", cfg.real_steps);
    read(j, "collect_steps", cfg.collect_steps);
    read(j, "zeta", cfg.zeta);
    read(j, "eps_twin", cfg.eps_twin);
    read(j, "twin_enabled", cfg.twin_enabled);
    read(j, "upsilon", cfg.upsilon);
    read(j, "offline_batch", cfg.offline_batch);
    read(j, "offline_epochs", cfg.offline_epochs);
    read(j, "distill_pool", cfg.distill_pool);
    read(j, "distill_budget", cfg.distill_budget);
    read(j, "student_hidden", cfg.student_hidden);
    read(j, "eval_rounds", cfg.eval_rounds);
}

json orch_to_json(const orch::OrchestratorConfig &cfg) {
    json j;
    j["outer_iterations"] = cfg.outer_iterations;
    j["twin_steps"] = cfg.twin_steps;
    j["real_steps"] = cfg.real_steps;
    j["collect_steps"] = cfg.collect_steps;
    j["zeta"] = cfg.zeta;
    j["eps_twin"] = cfg.eps_twin;
    j["twin_enabled"] = cfg.twin_enabled;
    j["upsilon"] = cfg.upsilon;
    j["offline_batch"] = cfg.offline_batch;
    j["offline_epochs"] = cfg.offline_epochs;
    j["distill_pool"] = cfg.distill_pool;
    j["distill_budget"] = cfg.distill_budget;
    j["student_hidden"] = cfg.student_hidden;
    j["eval_rounds"] = cfg.eval_rounds;
    return j;
}

void analysis_from_json(const json &j, AnalysisConfig &cfg) {
    require_keys(j, "analysis", {"round_size", "lambda_min", "lambda_max", "lambda_points", "landscape_batch"});
    read(j, "round_size", cfg.round_size);
    read(j, "lambda_min", cfg.lambda_min);
    read(j, "lambda_max", cfg.lambda_max);
    read(j, "lambda_points", cfg.lambda_points);
    read(j, "landscape_batch", cfg.landscape_batch);
}

json analysis_to_json(const AnalysisConfig &cfg) {
    json j;
    j["round_size"] = cfg.round_size;
    j["lambda_min"] = cfg.lambda_min;
    j["lambda_max"] = cfg.lambda_max;
    j["lambda_points"] = cfg.lambda_points;
    j["landscape_batch"] = cfg.landscape_batch;
    return j;
}

} // namespace

void AnalysisConfig::validate() const {
    if (round_size < 1)
        throw ConfigError("analysis: round_size must be >= 1");
    if (lambda_points < 1)
        throw ConfigError("analysis: lambda_points must be >= 1");
    if (lambda_max < lambda_min)
        throw ConfigError("analysis: lambda_max must be >= lambda_min");
    if (landscape_batch < 1)
        throw ConfigError("analysis: landscape_batch must be >= 1");
}

void ExperimentConfig::validate() const {
    env.validate();
    agent.validate();
    twin.validate();
    orchestrator.validate();
    analysis.validate();
}

ExperimentConfig default_config() {
    ExperimentConfig cfg;
    env::SliceSpec volte;
    volte.name = "volte";
    volte.rate_sla_bps = 51e3;
    volte.latency_sla_s = 10e-3;
    volte.packet_bits = 320;
    volte.beta = 1.0;
    volte.arrivals.kind = env::ArrivalSpec::Kind::Uniform;
    volte.arrivals.low = 5;
    volte.arrivals.high = 15;

    env::SliceSpec video;
    video.name = "video";
    video.rate_sla_bps = 100e6;
    video.latency_sla_s = 10e-3;
    video.packet_bits = 8000;
    video.beta = 1.0;
    video.arrivals.kind = env::ArrivalSpec::Kind::TruncatedExponential;
    video.arrivals.mean = 20.0;
    video.arrivals.cap = 60.0;

    env::SliceSpec urllc;
    urllc.name = "urllc";
    urllc.rate_sla_bps = 10e6;
    urllc.latency_sla_s = 1e-3;
    urllc.packet_bits = 800;
    urllc.beta = 1.0;
    urllc.arrivals.kind = env::ArrivalSpec::Kind::Exponential;
    urllc.arrivals.mean = 10.0;

    cfg.env.slices = {volte, video, urllc};
    cfg.env.total_bandwidth_hz = 20e6;
    cfg.env.units = 100; // 200 kHz resolution
    cfg.env.users_per_slice = {34, 33, 33};
    return cfg;
}

ExperimentConfig config_from_json(const json &j) {
    require_keys(j, "<root>", {"seed", "env", "agent", "twin", "orchestrator", "analysis", "io"});
    ExperimentConfig cfg = default_config();
    read(j, "seed", cfg.seed);
    if (j.contains("env"))
        env_from_json(j.at("env"), cfg.env);
    if (j.contains("agent"))
        agent_from_json(j.at("agent"), cfg.agent);
    if (j.contains("twin"))
        twin_from_json(j.at("twin"), cfg.twin);
    if (j.contains("orchestrator"))
        orch_from_json(j.at("orchestrator"), cfg.orchestrator);
    if (j.contains("analysis"))
        analysis_from_json(j.at("analysis"), cfg.analysis);
    if (j.contains("io")) {
        require_keys(j.at("io"), "io", {"out_dir"});
        read(j.at("io"), "out_dir", cfg.io.out_dir);
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError("config '" + path + "': " + e.what(), e.byte);
    }
    return config_from_json(j);
}

json config_to_json(const ExperimentConfig &cfg) {
    json j;
    j["seed"] = cfg.seed;
    j["env"] = env_to_json(cfg.env);
    j["agent"] = agent_to_json(cfg.agent);
    j["twin"] = twin_to_json(cfg.twin);
    j["orchestrator"] = orch_to_json(cfg.orchestrator);
    j["analysis"] = analysis_to_json(cfg.analysis);
    j["io"] = {{"out_dir", cfg.io.out_dir}};
    return j;
}

} // namespace dtslice::io
