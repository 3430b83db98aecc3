#include "dtslice/twin/session.hpp"

#include "dtslice/action_codec.hpp"
#include "dtslice/errors.hpp"

namespace dtslice::twin {

TwinSession::TwinSession(const Twin &twin, std::vector<Eigen::VectorXd> seed_states, int units, std::uint64_t seed)
    : twin_(twin), seed_states_(std::move(seed_states)), units_(units), rng_(seed) {
    if (seed_states_.empty())
        throw StateError("TwinSession: need at least one real observation to seed rollouts");
}

void TwinSession::reseed() {
    current_ = seed_states_[rng_.uniform_index(seed_states_.size())];
    past_.clear();
}

Eigen::VectorXd TwinSession::reset() {
    reseed();
    steps_ = 0;
    initialized_ = true;
    return current_;
}

const Eigen::VectorXd &TwinSession::current() const {
    if (!initialized_)
        throw StateError("TwinSession: reset() must be called first");
    return current_;
}

std::pair<Eigen::VectorXd, double> TwinSession::step(int action_index) {
    if (!initialized_)
        throw StateError("TwinSession: step() before reset()");
    const std::vector<int> alloc = decode_action(static_cast<std::uint64_t>(action_index), units_, twin_.state_dim());
    Eigen::VectorXd frac(twin_.state_dim());
    for (int n = 0; n < twin_.state_dim(); ++n)
        frac(n) = static_cast<double>(alloc[static_cast<std::size_t>(n)]) / static_cast<double>(units_);

    std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> context(past_.begin(), past_.end());
    context.emplace_back(current_, frac);
    auto [next, reward] = twin_.predict(context);

    past_.emplace_back(current_, frac);
    while (static_cast<int>(past_.size()) > twin_.config().window - 1)
        past_.pop_front();
    current_ = next;
    steps_ += 1;
    if (steps_ % twin_.config().rollout_reset_period == 0)
        reseed();
    return {next, reward};
}

} // namespace dtslice::twin
