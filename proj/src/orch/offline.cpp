#include "dtslice/orch/offline.hpp"

#include "dtslice/errors.hpp"
#include "dtslice/rng.hpp"

#include <numeric>

namespace dtslice::orch {

OfflineResult run_offline(agents::DqnAgent &agent, const std::vector<agents::Transition> &dataset,
                          const nn::Vector &theta2_ref, double upsilon, int batch_size, int epochs,
                          std::uint64_t shuffle_seed) {
    if (dataset.empty())
        throw StateError("run_offline: empty dataset");
    if (batch_size < 1)
        throw ConfigError("run_offline: batch_size must be >= 1");
    if (upsilon > 0.0 && theta2_ref.size() != agent.flat_online().size())
        throw ShapeError("run_offline: reference vector does not match the agent's parameter count");

    Rng rng(shuffle_seed);
    std::vector<std::size_t> order(dataset.size());
    std::iota(order.begin(), order.end(), 0);

    OfflineResult result;
    for (int epoch = 0; epoch < epochs; ++epoch) {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.uniform_index(i)]);
        double loss_sum = 0.0;
        std::size_t seen = 0;
        for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(batch_size)) {
            const std::size_t stop = std::min(order.size(), start + static_cast<std::size_t>(batch_size));
            std::vector<agents::Transition> batch;
            batch.reserve(stop - start);
            for (std::size_t k = start; k < stop; ++k)
                batch.push_back(dataset[order[k]]);
            double loss;
            if (upsilon > 0.0)
                loss = agent.train_on_batch(batch, upsilon, &theta2_ref);
            else
                loss = agent.train_on_batch(batch);
            loss_sum += loss * static_cast<double>(batch.size());
            seen += batch.size();
            result.updates += 1;
        }
        result.epoch_loss.push_back(loss_sum / static_cast<double>(seen));
    }
    return result;
}

} // namespace dtslice::orch
