#pragma once

#include "dtslice/twin/twin.hpp"

#include <deque>

namespace dtslice::twin {

// Rollout session that lets an agent interact with the twin as if it were the
// environment. The session keeps a rolling context window and periodically
// re-seeds itself from a real logged observation so model error cannot
// compound without bound. It never touches the real environment.
class TwinSession {
public:
    TwinSession(const Twin &twin, std::vector<Eigen::VectorXd> seed_states, int units, std::uint64_t seed);

    Eigen::VectorXd reset();
    std::pair<Eigen::VectorXd, double> step(int action_index);

    long steps() const { return steps_; }
    const Eigen::VectorXd &current() const;

private:
    void reseed();

    const Twin &twin_;
    std::vector<Eigen::VectorXd> seed_states_;
    int units_;
    Rng rng_;
    bool initialized_ = false;
    long steps_ = 0;
    Eigen::VectorXd current_;
    std::deque<std::pair<Eigen::VectorXd, Eigen::VectorXd>> past_; // up to window-1 previous pairs
};

} // namespace dtslice::twin
