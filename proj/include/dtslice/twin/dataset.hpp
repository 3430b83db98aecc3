#pragma once

#include "dtslice/rng.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <utility>
#include <vector>

namespace dtslice::twin {

// One logged transition with its position inside a collection episode. The
// action is stored as per-slice allocation fractions, never as a raw index, so
// the twin input is independent of the allocation resolution.
struct TwinItem {
    Eigen::VectorXd s;
    Eigen::VectorXd a_frac;
    double r = 0.0;
    Eigen::VectorXd s_next;
    int episode = 0;
    long index_in_episode = 0;
};

class TwinDataset {
public:
    // Starts a new collection episode; subsequent add() calls belong to it.
    void begin_episode();
    void add(Eigen::VectorXd s, Eigen::VectorXd a_frac, double r, Eigen::VectorXd s_next);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const TwinItem &item(std::size_t i) const { return items_[i]; }

    // Sequence context for item i: the (s, a) pairs of up to `window`
    // consecutive items ending at i, never crossing an episode boundary.
    std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> context(std::size_t i, int window) const;

    // Deterministic disjoint train/holdout split over items.
    void finalize_split(double holdout_fraction, std::uint64_t seed);
    bool has_split() const { return !holdout_indices_.empty() || split_done_; }
    const std::vector<std::size_t> &train_indices() const;
    const std::vector<std::size_t> &holdout_indices() const { return holdout_indices_; }

private:
    std::vector<TwinItem> items_;
    int current_episode_ = -1;
    long next_index_in_episode_ = 0;
    bool split_done_ = false;
    std::vector<std::size_t> train_indices_;
    std::vector<std::size_t> holdout_indices_;
    mutable std::vector<std::size_t> all_indices_; // lazily built when no split exists
};

} // namespace dtslice::twin
