#pragma once

#include "dtslice/nn/paramset.hpp"
#include "dtslice/rng.hpp"

#include <cstddef>
#include <vector>

namespace dtslice::agents {

struct Transition {
    Eigen::VectorXd s;
    int a = 0;
    double r = 0.0;
    Eigen::VectorXd s_next;
};

// Fixed-capacity ring buffer with uniform sampling (with replacement).
class ReplayBuffer {
public:
    explicit ReplayBuffer(std::size_t capacity);

    void push(Transition t);
    std::vector<Transition> sample(std::size_t count, Rng &rng) const;

    std::size_t size() const { return items_.size(); }
    std::size_t capacity() const { return capacity_; }
    const Transition &at(std::size_t i) const { return items_[i]; }

private:
    std::size_t capacity_;
    std::size_t cursor_ = 0;
    std::vector<Transition> items_;
};

} // namespace dtslice::agents
