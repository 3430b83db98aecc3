#pragma once

#include "dtslice/nn/adam.hpp"
#include "dtslice/nn/lstm.hpp"
#include "dtslice/nn/mlp.hpp"
#include "dtslice/twin/dataset.hpp"

#include <utility>
#include <vector>

namespace dtslice::twin {

struct TwinConfig {
    int lstm_hidden = 64;
    int window = 8;             // sequence length L; shorter contexts are zero-padded in front
    int epochs = 30;
    double lr = 1e-3;
    int batch_size = 64;
    int rollout_reset_period = 16;
    std::vector<int> reward_hidden = {64, 64};
    double holdout_fraction = 0.2;

    void validate() const;
};

struct TwinReport {
    std::vector<double> state_loss_per_epoch;
    std::vector<double> reward_loss_per_epoch;
};

// Virtual environment model: an LSTM regressing the next normalized
// observation from a window of (state, allocation) pairs, and a feed-forward
// net regressing the shaped reward from the current pair. Both are trained by
// minibatch mean-squared-error regression on logged transitions.
class Twin {
public:
    Twin(int state_dim, TwinConfig cfg, std::uint64_t seed);

    // Supervised calibration on the dataset's train split (every item when no
    // split was made). Warm-starts from the current parameters.
    TwinReport fit(const TwinDataset &dataset);

    // Deterministic point prediction from a nonempty context of at most
    // `window` (state, allocation-fraction) pairs ending at the pair to
    // predict from. The state prediction is clamped to [0, 1]^N.
    std::pair<Eigen::VectorXd, double> predict(
        const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> &context) const;

    // Mean state / reward losses over the given dataset items; no state change.
    std::pair<double, double> evaluate(const TwinDataset &dataset, const std::vector<std::size_t> &indices) const;

    bool calibrated() const { return calibrated_; }
    int state_dim() const { return state_dim_; }
    const TwinConfig &config() const { return cfg_; }

    const nn::LstmSpec &state_spec() const { return pspec_; }
    const nn::MlpSpec &reward_spec() const { return rspec_; }
    nn::ParamSet &state_params() { return p_params_; }
    const nn::ParamSet &state_params() const { return p_params_; }
    nn::ParamSet &reward_params() { return r_params_; }
    const nn::ParamSet &reward_params() const { return r_params_; }
    void mark_calibrated() { calibrated_ = true; }

private:
    struct Batch {
        std::vector<nn::Matrix> sequence; // window tensors, each B x 2N
        nn::Matrix last_pair;             // B x 2N
        nn::Matrix next_states;           // B x N
        nn::Matrix rewards;               // B x 1
    };
    Batch assemble(const TwinDataset &dataset, const std::vector<std::size_t> &indices) const;

    int state_dim_;
    TwinConfig cfg_;
    nn::LstmSpec pspec_;
    nn::MlpSpec rspec_;
    nn::ParamSet p_params_;
    nn::ParamSet r_params_;
    nn::AdamState p_opt_;
    nn::AdamState r_opt_;
    Rng rng_;
    bool calibrated_ = false;
};

} // namespace dtslice::twin
