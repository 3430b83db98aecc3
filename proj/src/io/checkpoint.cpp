#include "dtslice/io/checkpoint.hpp"

#include "dtslice/errors.hpp"
#include "dtslice/io/files.hpp"

#include <nlohmann/json.hpp>

namespace dtslice::io {

using nlohmann::json;

namespace {

void check_version(const json &j, const std::string &path) {
    if (!j.contains("format_version"))
        throw ParseError("checkpoint '" + path + "': missing format_version");
    const int version = j.at("format_version").get<int>();
    if (version != kCheckpointFormatVersion)
        throw ParseError("checkpoint '" + path + "': format_version " + std::to_string(version) +
                         " not supported (expected " + std::to_string(kCheckpointFormatVersion) + ")");
}

void check_kind(const json &j, const std::string &path, const std::string &expected) {
    const std::string kind = j.value("kind", "");
    if (kind != expected)
        throw ParseError("checkpoint '" + path + "': kind '" + kind + "' (expected '" + expected + "')");
}

json adam_to_json(const nn::AdamState &state) {
    json j;
    j["lr"] = state.config.lr;
    j["beta1"] = state.config.beta1;
    j["beta2"] = state.config.beta2;
    j["epsilon"] = state.config.epsilon;
    j["m"] = paramset_to_json(state.m);
    j["v"] = paramset_to_json(state.v);
    j["step"] = state.step;
    return j;
}

nn::AdamState adam_from_json(const json &j) {
    nn::AdamState state;
    state.config.lr = j.at("lr").get<double>();
    state.config.beta1 = j.at("beta1").get<double>();
    state.config.beta2 = j.at("beta2").get<double>();
    state.config.epsilon = j.at("epsilon").get<double>();
    state.m = paramset_from_json(j.at("m"));
    state.v = paramset_from_json(j.at("v"));
    state.step = j.at("step").get<long>();
    return state;
}

void assign_checked(nn::ParamSet &dst, const nn::ParamSet &src, const std::string &what) {
    if (!dst.same_shape(src))
        throw ParseError("checkpoint: " + what + " does not match the declared architecture");
    dst = src;
}

} // namespace

json paramset_to_json(const nn::ParamSet &params) {
    json j = json::object();
    for (const auto &[name, t] : params.tensors()) {
        json tensor;
        tensor["rows"] = t.rows();
        tensor["cols"] = t.cols();
        std::vector<double> data(t.data(), t.data() + t.size());
        tensor["data"] = data;
        j[name] = tensor;
    }
    return j;
}

nn::ParamSet paramset_from_json(const json &j) {
    nn::ParamSet params;
    for (const auto &[name, tensor] : j.items()) {
        const Eigen::Index rows = tensor.at("rows").get<Eigen::Index>();
        const Eigen::Index cols = tensor.at("cols").get<Eigen::Index>();
        const std::vector<double> data = tensor.at("data").get<std::vector<double>>();
        if (static_cast<Eigen::Index>(data.size()) != rows * cols)
            throw ParseError("checkpoint tensor '" + name + "': data length does not match shape");
        nn::Matrix &m = params.add(name, rows, cols);
        std::copy(data.begin(), data.end(), m.data());
    }
    return params;
}

void save_agent_checkpoint(const std::string &path, const agents::DqnAgent &agent) {
    const agents::AgentConfig &cfg = agent.config();
    json j;
    j["format_version"] = kCheckpointFormatVersion;
    j["kind"] = "agent";
    j["algo"] = agents::algo_to_string(cfg.algo);
    j["state_dim"] = agent.state_dim();
    j["num_actions"] = agent.num_actions();
    j["agent_config"] = {{"discount", cfg.discount},
                         {"explore_start", cfg.explore_start},
                         {"explore_end", cfg.explore_end},
                         {"explore_decay_steps", cfg.explore_decay_steps},
                         {"replay_capacity", cfg.replay_capacity},
                         {"batch_size", cfg.batch_size},
                         {"target_sync_period", cfg.target_sync_period},
                         {"lr", cfg.lr},
                         {"hidden_widths", cfg.hidden_widths}};
    j["params"] = paramset_to_json(agent.online_params());
    j["target_params"] = paramset_to_json(agent.target_params());
    j["adam"] = adam_to_json(agent.optimizer());
    j["train_steps"] = agent.train_steps();
    j["param_steps"] = agent.online_params().step_count;
    j["rng"] = agent.rng().serialize();
    write_json_file(path, j);
}

std::unique_ptr<agents::DqnAgent> load_agent_checkpoint(const std::string &path) {
    const json j = read_json_file(path);
    check_version(j, path);
    check_kind(j, path, "agent");
    agents::AgentConfig cfg;
    cfg.algo = agents::algo_from_string(j.at("algo").get<std::string>());
    const json &ac = j.at("agent_config");
    cfg.discount = ac.at("discount").get<double>();
    cfg.explore_start = ac.at("explore_start").get<double>();
    cfg.explore_end = ac.at("explore_end").get<double>();
    cfg.explore_decay_steps = ac.at("explore_decay_steps").get<long>();
    cfg.replay_capacity = ac.at("replay_capacity").get<std::size_t>();
    cfg.batch_size = ac.at("batch_size").get<int>();
    cfg.target_sync_period = ac.at("target_sync_period").get<int>();
    cfg.lr = ac.at("lr").get<double>();
    cfg.hidden_widths = ac.at("hidden_widths").get<std::vector<int>>();

    auto agent = std::make_unique<agents::DqnAgent>(j.at("state_dim").get<int>(), j.at("num_actions").get<int>(), cfg,
                                                    /*seed=*/0);
    assign_checked(agent->online_params(), paramset_from_json(j.at("params")), "online parameters");
    assign_checked(agent->target_params(), paramset_from_json(j.at("target_params")), "target parameters");
    agent->optimizer() = adam_from_json(j.at("adam"));
    if (!agent->optimizer().m.same_shape(agent->online_params()))
        throw ParseError("checkpoint '" + path + "': optimizer state does not match the architecture");
    agent->set_train_steps(j.at("train_steps").get<long>());
    agent->online_params().step_count = j.at("param_steps").get<long>();
    agent->rng().deserialize(j.at("rng").get<std::string>());
    return agent;
}

void save_twin_checkpoint(const std::string &path, const twin::Twin &twin) {
    const twin::TwinConfig &cfg = twin.config();
    json j;
    j["format_version"] = kCheckpointFormatVersion;
    j["kind"] = "twin";
    j["state_dim"] = twin.state_dim();
    j["twin_config"] = {{"lstm_hidden", cfg.lstm_hidden},
                        {"window", cfg.window},
                        {"epochs", cfg.epochs},
                        {"lr", cfg.lr},
                        {"batch_size", cfg.batch_size},
                        {"rollout_reset_period", cfg.rollout_reset_period},
                        {"reward_hidden", cfg.reward_hidden},
                        {"holdout_fraction", cfg.holdout_fraction}};
    j["state_params"] = paramset_to_json(twin.state_params());
    j["reward_params"] = paramset_to_json(twin.reward_params());
    j["calibrated"] = twin.calibrated();
    write_json_file(path, j);
}

std::unique_ptr<twin::Twin> load_twin_checkpoint(const std::string &path) {
    const json j = read_json_file(path);
    check_version(j, path);
    check_kind(j, path, "twin");
    twin::TwinConfig cfg;
    const json &tc = j.at("twin_config");
    cfg.lstm_hidden = tc.at("lstm_hidden").get<int>();
    cfg.window = tc.at("window").get<int>();
    cfg.epochs = tc.at("epochs").get<int>();
    cfg.lr = tc.at("lr").get<double>();
    cfg.batch_size = tc.at("batch_size").get<int>();
    cfg.rollout_reset_period = tc.at("rollout_reset_period").get<int>();
    cfg.reward_hidden = tc.at("reward_hidden").get<std::vector<int>>();
    cfg.holdout_fraction = tc.at("holdout_fraction").get<double>();
    auto twin_model = std::make_unique<twin::Twin>(j.at("state_dim").get<int>(), cfg, /*seed=*/0);
    assign_checked(twin_model->state_params(), paramset_from_json(j.at("state_params")), "state-model parameters");
    assign_checked(twin_model->reward_params(), paramset_from_json(j.at("reward_params")), "reward-model parameters");
    if (j.at("calibrated").get<bool>())
        twin_model->mark_calibrated();
    return twin_model;
}

void save_policy_checkpoint(const std::string &path, const nn::MlpSpec &spec, const nn::ParamSet &params) {
    json j;
    j["format_version"] = kCheckpointFormatVersion;
    j["kind"] = "policy";
    j["widths"] = spec.widths;
    j["params"] = paramset_to_json(params);
    write_json_file(path, j);
}

std::pair<nn::MlpSpec, nn::ParamSet> load_policy_checkpoint(const std::string &path) {
    const json j = read_json_file(path);
    check_version(j, path);
    check_kind(j, path, "policy");
    nn::MlpSpec spec;
    spec.widths = j.at("widths").get<std::vector<int>>();
    nn::ParamSet params = paramset_from_json(j.at("params"));
    return {spec, params};
}

} // namespace dtslice::io
