#include "dtslice/io/transition_log.hpp"

#include "dtslice/errors.hpp"
#include "dtslice/io/files.hpp"

#include <nlohmann/json.hpp>

namespace dtslice::io {

using nlohmann::json;

std::size_t TransitionLog::total_steps() const {
    std::size_t n = 0;
    for (const Episode &e : episodes)
        n += e.steps.size();
    return n;
}

json step_record_to_json(const StepRecord &r) {
    json j;
    j["t"] = r.t;
    j["obs"] = r.obs;
    j["action_index"] = r.action_index;
    j["alloc"] = r.alloc;
    j["se"] = r.se;
    j["ssr"] = r.ssr;
    j["utility"] = r.utility;
    j["reward"] = r.reward;
    return j;
}

StepRecord step_record_from_json(const json &j) {
    StepRecord r;
    r.t = j.at("t").get<long>();
    r.obs = j.at("obs").get<std::vector<double>>();
    r.action_index = j.at("action_index").get<int>();
    r.alloc = j.at("alloc").get<std::vector<int>>();
    r.se = j.at("se").get<double>();
    r.ssr = j.at("ssr").get<std::vector<double>>();
    r.utility = j.at("utility").get<double>();
    r.reward = j.at("reward").get<double>();
    return r;
}

void save_transition_log(const std::string &path, const TransitionLog &log) {
    std::vector<json> rows;
    for (const TransitionLog::Episode &e : log.episodes) {
        for (const StepRecord &r : e.steps)
            rows.push_back(step_record_to_json(r));
        StepRecord sentinel;
        sentinel.t = e.steps.empty() ? 0 : e.steps.back().t + 1;
        sentinel.obs = e.final_obs;
        sentinel.action_index = -1;
        rows.push_back(step_record_to_json(sentinel));
    }
    write_jsonl_file(path, rows);
}

TransitionLog read_transition_log(const std::string &path) {
    const std::vector<json> rows = read_jsonl_file(path);
    TransitionLog log;
    TransitionLog::Episode current;
    for (const json &row : rows) {
        StepRecord r = step_record_from_json(row);
        if (r.action_index < 0) {
            current.final_obs = r.obs;
            log.episodes.push_back(std::move(current));
            current = TransitionLog::Episode{};
        } else {
            current.steps.push_back(std::move(r));
        }
    }
    if (!current.steps.empty()) // tolerate a log without the trailing row
        log.episodes.push_back(std::move(current));
    return log;
}

namespace {

Eigen::VectorXd to_vector(const std::vector<double> &v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

} // namespace

std::vector<agents::Transition> log_to_transitions(const TransitionLog &log) {
    std::vector<agents::Transition> out;
    for (const TransitionLog::Episode &e : log.episodes) {
        for (std::size_t i = 0; i < e.steps.size(); ++i) {
            const StepRecord &r = e.steps[i];
            const bool last = i + 1 == e.steps.size();
            if (last && e.final_obs.empty())
                break; // next state unknown
            agents::Transition t;
            t.s = to_vector(r.obs);
            t.a = r.action_index;
            t.r = r.reward;
            t.s_next = to_vector(last ? e.final_obs : e.steps[i + 1].obs);
            out.push_back(std::move(t));
        }
    }
    return out;
}

twin::TwinDataset log_to_twin_dataset(const TransitionLog &log, int units) {
    if (units < 1)
        throw ConfigError("log_to_twin_dataset: units must be >= 1");
    twin::TwinDataset ds;
    for (const TransitionLog::Episode &e : log.episodes) {
        ds.begin_episode();
        for (std::size_t i = 0; i < e.steps.size(); ++i) {
            const StepRecord &r = e.steps[i];
            const bool last = i + 1 == e.steps.size();
            if (last && e.final_obs.empty())
                break;
            Eigen::VectorXd frac(static_cast<Eigen::Index>(r.alloc.size()));
            for (Eigen::Index n = 0; n < frac.size(); ++n)
                frac(n) = static_cast<double>(r.alloc[static_cast<std::size_t>(n)]) / static_cast<double>(units);
            ds.add(to_vector(r.obs), frac, r.reward, to_vector(last ? e.final_obs : e.steps[i + 1].obs));
        }
    }
    return ds;
}

std::vector<Eigen::VectorXd> log_states(const TransitionLog &log) {
    std::vector<Eigen::VectorXd> states;
    for (const TransitionLog::Episode &e : log.episodes)
        for (const StepRecord &r : e.steps)
            states.push_back(to_vector(r.obs));
    return states;
}

void save_metrics_jsonl(const std::string &path, const std::vector<MetricsRow> &rows) {
    std::vector<json> out;
    out.reserve(rows.size());
    for (const MetricsRow &r : rows) {
        json j;
        j["round"] = r.round;
        j["mean_reward"] = r.mean_reward;
        j["mean_utility"] = r.mean_utility;
        j["mean_se"] = r.mean_se;
        j["mean_ssr"] = r.mean_ssr;
        j["cum_real"] = r.cum_real;
        j["cum_twin"] = r.cum_twin;
        out.push_back(std::move(j));
    }
    write_jsonl_file(path, out);
}

std::vector<MetricsRow> read_metrics_jsonl(const std::string &path) {
    std::vector<MetricsRow> rows;
    for (const json &j : read_jsonl_file(path)) {
        MetricsRow r;
        r.round = j.at("round").get<long>();
        r.mean_reward = j.at("mean_reward").get<double>();
        r.mean_utility = j.at("mean_utility").get<double>();
        r.mean_se = j.at("mean_se").get<double>();
        r.mean_ssr = j.at("mean_ssr").get<std::vector<double>>();
        r.cum_real = j.at("cum_real").get<long>();
        r.cum_twin = j.at("cum_twin").get<long>();
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace dtslice::io
