#include "dtslice/io/landscape.hpp"

#include "dtslice/errors.hpp"
#include "dtslice/io/files.hpp"
#include "dtslice/nn/loss.hpp"

#include <Eigen/QR>
#include <nlohmann/json.hpp>

namespace dtslice::io {

using nlohmann::json;

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 1)
        throw ConfigError("linspace: need at least one point");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < points; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
    return out;
}

LandscapeResult landscape_scan(const std::function<double(const nn::Vector &)> &loss,
                               const std::function<nn::Vector(const nn::Vector &)> &gradient, const nn::Vector &theta,
                               const std::vector<double> &lambdas) {
    LandscapeResult result;
    result.lambdas = lambdas;
    result.base_loss = loss(theta);
    const nn::Vector g = gradient(theta);
    result.gradient_norm = g.norm();
    nn::Vector direction;
    if (result.gradient_norm > 0.0) {
        direction = g / result.gradient_norm;
    } else {
        result.zero_gradient = true;
        direction = nn::Vector::Zero(theta.size());
    }
    result.losses.reserve(lambdas.size());
    for (double lambda : lambdas) {
        if (lambda == 0.0) {
            result.losses.push_back(result.base_loss);
            continue;
        }
        result.losses.push_back(loss(theta + lambda * direction));
    }
    return result;
}

LandscapeResult agent_td_landscape(const agents::DqnAgent &agent, const std::vector<agents::Transition> &batch,
                                   const std::vector<double> &lambdas) {
    if (batch.empty())
        throw StateError("agent_td_landscape: empty batch");
    const nn::MlpSpec &spec = agent.spec();
    const nn::Vector y = agents::td_targets(batch, agent.online_params(), agent.target_params(), spec,
                                            agent.config().algo, agent.config().discount);
    const Eigen::Index b = static_cast<Eigen::Index>(batch.size());
    nn::Matrix states(b, spec.input_width());
    std::vector<int> actions(batch.size());
    for (Eigen::Index i = 0; i < b; ++i) {
        states.row(i) = batch[static_cast<std::size_t>(i)].s.transpose();
        actions[static_cast<std::size_t>(i)] = batch[static_cast<std::size_t>(i)].a;
    }
    nn::LossSpec loss;
    loss.kind = nn::LossSpec::Kind::Td;
    loss.labels = actions;
    loss.td_targets = y;

    const nn::ParamSet &shape = agent.online_params();
    auto loss_fn = [&](const nn::Vector &flat) {
        const nn::ParamSet p = nn::unflatten(flat, shape);
        return nn::mlp_loss_and_grad(p, spec, states, loss, nullptr);
    };
    auto grad_fn = [&](const nn::Vector &flat) {
        const nn::ParamSet p = nn::unflatten(flat, shape);
        nn::ParamSet grads;
        nn::mlp_loss_and_grad(p, spec, states, loss, &grads);
        return nn::flatten(grads);
    };
    return landscape_scan(loss_fn, grad_fn, nn::flatten(shape), lambdas);
}

void save_landscape(const std::string &path, const LandscapeResult &result) {
    std::vector<json> rows;
    json header;
    header["base_loss"] = result.base_loss;
    header["gradient_norm"] = result.gradient_norm;
    header["direction"] = "normalized_gradient";
    header["zero_gradient"] = result.zero_gradient;
    header["points"] = result.lambdas.size();
    rows.push_back(header);
    for (std::size_t i = 0; i < result.lambdas.size(); ++i)
        rows.push_back(json{{"lambda", result.lambdas[i]}, {"loss", result.losses[i]}});
    write_jsonl_file(path, rows);
}

double quadratic_coefficient(const LandscapeResult &result) {
    const Eigen::Index n = static_cast<Eigen::Index>(result.lambdas.size());
    if (n < 3)
        throw StateError("quadratic_coefficient: need at least three scan points");
    Eigen::MatrixXd design(n, 3);
    Eigen::VectorXd target(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double l = result.lambdas[static_cast<std::size_t>(i)];
        design(i, 0) = l * l;
        design(i, 1) = l;
        design(i, 2) = 1.0;
        target(i) = result.losses[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd coeffs = design.colPivHouseholderQr().solve(target);
    return coeffs(0);
}

LandscapeResult read_landscape(const std::string &path) {
    const std::vector<json> rows = read_jsonl_file(path);
    if (rows.empty())
        throw ParseError("landscape '" + path + "': empty file");
    LandscapeResult result;
    result.base_loss = rows[0].at("base_loss").get<double>();
    result.gradient_norm = rows[0].at("gradient_norm").get<double>();
    result.zero_gradient = rows[0].at("zero_gradient").get<bool>();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        result.lambdas.push_back(rows[i].at("lambda").get<double>());
        result.losses.push_back(rows[i].at("loss").get<double>());
    }
    return result;
}

} // namespace dtslice::io
