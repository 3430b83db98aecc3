#include "dtslice/orch/distill.hpp"

#include "dtslice/agents/agent.hpp"
#include "dtslice/errors.hpp"
#include "dtslice/nn/adam.hpp"
#include "dtslice/nn/loss.hpp"
#include "dtslice/rng.hpp"

#include <numeric>

namespace dtslice::orch {

DistillResult distill(const nn::MlpSpec &teacher_spec, const nn::ParamSet &teacher_params,
                      const std::vector<Eigen::VectorXd> &state_pool, const DistillConfig &cfg, std::uint64_t seed) {
    if (state_pool.empty())
        throw std::invalid_argument("distill: empty state pool");

    Rng rng(seed);
    const int state_dim = teacher_spec.input_width();
    const int num_actions = teacher_spec.output_width();

    // Pseudo-label the pool with the teacher's greedy actions.
    const Eigen::Index pool = static_cast<Eigen::Index>(state_pool.size());
    nn::Matrix states(pool, state_dim);
    for (Eigen::Index i = 0; i < pool; ++i) {
        if (state_pool[static_cast<std::size_t>(i)].size() != state_dim)
            throw ShapeError("distill: state width does not match the teacher input");
        states.row(i) = state_pool[static_cast<std::size_t>(i)].transpose();
    }
    const nn::Matrix teacher_q = nn::mlp_forward(teacher_params, teacher_spec, states);
    std::vector<int> labels(state_pool.size());
    for (Eigen::Index i = 0; i < pool; ++i)
        labels[static_cast<std::size_t>(i)] = agents::argmax_lowest(teacher_q.row(i).transpose());

    // Disjoint holdout split.
    std::vector<std::size_t> order(state_pool.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.uniform_index(i)]);
    const std::size_t holdout_count =
        std::min(order.size() - 1, static_cast<std::size_t>(cfg.holdout_fraction * static_cast<double>(order.size())));
    const std::vector<std::size_t> holdout(order.begin(), order.begin() + static_cast<long>(holdout_count));
    const std::vector<std::size_t> train(order.begin() + static_cast<long>(holdout_count), order.end());

    DistillResult result;
    result.student_spec.widths.push_back(state_dim);
    for (int w : cfg.hidden)
        result.student_spec.widths.push_back(w);
    result.student_spec.widths.push_back(num_actions);
    result.student_params = nn::mlp_init(result.student_spec, rng);
    nn::AdamState opt = nn::AdamState::for_params(result.student_params, nn::AdamConfig{cfg.lr});

    const int batch = std::min<int>(cfg.batch_size, static_cast<int>(train.size()));
    for (long update = 0; update < cfg.budget; ++update) {
        nn::Matrix x(batch, state_dim);
        std::vector<int> y(static_cast<std::size_t>(batch));
        for (int i = 0; i < batch; ++i) {
            const std::size_t pick = train[rng.uniform_index(train.size())];
            x.row(i) = states.row(static_cast<Eigen::Index>(pick));
            y[static_cast<std::size_t>(i)] = labels[pick];
        }
        nn::LossSpec loss;
        loss.kind = nn::LossSpec::Kind::CrossEntropy;
        loss.labels = std::move(y);
        nn::ParamSet grads;
        result.final_loss = nn::mlp_loss_and_grad(result.student_params, result.student_spec, x, loss, &grads);
        nn::adam_update(result.student_params, grads, opt);
        result.updates += 1;
    }

    // Greedy agreement on the held-out states (on the training split when the
    // pool is too small to hold anything out).
    const std::vector<std::size_t> &eval_set = holdout.empty() ? train : holdout;
    long agree = 0;
    for (std::size_t idx : eval_set) {
        const nn::Matrix q =
            nn::mlp_forward(result.student_params, result.student_spec, states.row(static_cast<Eigen::Index>(idx)));
        if (agents::argmax_lowest(q.row(0).transpose()) == labels[idx])
            agree += 1;
    }
    result.holdout_agreement = static_cast<double>(agree) / static_cast<double>(eval_set.size());
    return result;
}

} // namespace dtslice::orch
