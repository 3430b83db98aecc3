#include "dtslice/agents/replay_buffer.hpp"

#include "dtslice/errors.hpp"

namespace dtslice::agents {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0)
        throw ConfigError("ReplayBuffer: capacity must be positive");
    items_.reserve(capacity_);
}

void ReplayBuffer::push(Transition t) {
    if (items_.size() < capacity_) {
        items_.push_back(std::move(t));
    } else {
        items_[cursor_] = std::move(t); // overwrite oldest
        cursor_ = (cursor_ + 1) % capacity_;
    }
}

std::vector<Transition> ReplayBuffer::sample(std::size_t count, Rng &rng) const {
    if (items_.empty())
        throw StateError("ReplayBuffer::sample: buffer is empty");
    if (count > items_.size())
        throw StateError("ReplayBuffer::sample: requested more items than stored");
    std::vector<Transition> batch;
    batch.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        batch.push_back(items_[rng.uniform_index(items_.size())]);
    return batch;
}

} // namespace dtslice::agents
