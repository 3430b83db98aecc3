#pragma once

#include "dtslice/agents/agent.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dtslice::io {

struct LandscapeResult {
    std::vector<double> lambdas;
    std::vector<double> losses;
    double base_loss = 0.0;
    double gradient_norm = 0.0; // norm of the unnormalized gradient at the base point
    bool zero_gradient = false; // direction undefined; the curve is constant
};

std::vector<double> linspace(double lo, double hi, int points);

// Evaluates loss(theta + lambda * v) over the grid, where v is the gradient at
// theta normalized to unit length. The base point is never mutated. A zero
// gradient degenerates to a constant curve and sets the warning flag.
LandscapeResult landscape_scan(const std::function<double(const nn::Vector &)> &loss,
                               const std::function<nn::Vector(const nn::Vector &)> &gradient, const nn::Vector &theta,
                               const std::vector<double> &lambdas);

// Scan of the agent's own TD loss on a fixed batch. Targets are computed once
// from the agent's (frozen) online and target networks at the base point; only
// the perturbed online network is re-evaluated per lambda.
LandscapeResult agent_td_landscape(const agents::DqnAgent &agent, const std::vector<agents::Transition> &batch,
                                   const std::vector<double> &lambdas);

// Header line (scan metadata) followed by one {lambda, loss} line per point.
void save_landscape(const std::string &path, const LandscapeResult &result);
LandscapeResult read_landscape(const std::string &path);

// Least-squares quadratic coefficient of loss(lambda); a flatness summary for
// comparing scans (smaller = flatter).
double quadratic_coefficient(const LandscapeResult &result);

} // namespace dtslice::io
