#include "dtslice/twin/dataset.hpp"

#include "dtslice/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dtslice::twin {

void TwinDataset::begin_episode() {
    current_episode_ += 1;
    next_index_in_episode_ = 0;
}

void TwinDataset::add(Eigen::VectorXd s, Eigen::VectorXd a_frac, double r, Eigen::VectorXd s_next) {
    if (current_episode_ < 0)
        begin_episode();
    TwinItem item;
    item.s = std::move(s);
    item.a_frac = std::move(a_frac);
    item.r = r;
    item.s_next = std::move(s_next);
    item.episode = current_episode_;
    item.index_in_episode = next_index_in_episode_++;
    items_.push_back(std::move(item));
}

std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> TwinDataset::context(std::size_t i, int window) const {
    if (i >= items_.size())
        throw std::out_of_range("TwinDataset::context: item index out of range");
    const TwinItem &anchor = items_[i];
    const long back = std::min<long>(anchor.index_in_episode, window - 1);
    std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> ctx;
    ctx.reserve(static_cast<std::size_t>(back) + 1);
    for (long k = back; k >= 0; --k) {
        const TwinItem &it = items_[i - static_cast<std::size_t>(k)];
        ctx.emplace_back(it.s, it.a_frac);
    }
    return ctx;
}

void TwinDataset::finalize_split(double holdout_fraction, std::uint64_t seed) {
    if (holdout_fraction < 0.0 || holdout_fraction >= 1.0)
        throw ConfigError("TwinDataset: holdout_fraction must lie in [0, 1)");
    std::vector<std::size_t> order(items_.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.uniform_index(i)]);
    const std::size_t holdout_count = static_cast<std::size_t>(holdout_fraction * static_cast<double>(order.size()));
    holdout_indices_.assign(order.begin(), order.begin() + static_cast<long>(holdout_count));
    train_indices_.assign(order.begin() + static_cast<long>(holdout_count), order.end());
    std::sort(holdout_indices_.begin(), holdout_indices_.end());
    std::sort(train_indices_.begin(), train_indices_.end());
    split_done_ = true;
}

const std::vector<std::size_t> &TwinDataset::train_indices() const {
    if (split_done_)
        return train_indices_;
    all_indices_.resize(items_.size());
    std::iota(all_indices_.begin(), all_indices_.end(), 0);
    return all_indices_;
}

} // namespace dtslice::twin
