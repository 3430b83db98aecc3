#include "dtslice/io/metrics.hpp"

#include "dtslice/errors.hpp"

namespace dtslice::io {

std::vector<MetricsRow> aggregate_rounds(const std::vector<StepRecord> &steps, int round_size,
                                         const std::vector<long> &twin_counts) {
    if (round_size < 1)
        throw ConfigError("aggregate_rounds: round_size must be >= 1");
    if (!twin_counts.empty() && twin_counts.size() != steps.size())
        throw ShapeError("aggregate_rounds: twin_counts must align with steps");
    std::vector<MetricsRow> rows;
    const std::size_t full_rounds = steps.size() / static_cast<std::size_t>(round_size);
    for (std::size_t r = 0; r < full_rounds; ++r) {
        const std::size_t begin = r * static_cast<std::size_t>(round_size);
        const std::size_t end = begin + static_cast<std::size_t>(round_size);
        MetricsRow row;
        row.round = static_cast<long>(r);
        const std::size_t n_slices = steps[begin].ssr.size();
        row.mean_ssr.assign(n_slices, 0.0);
        for (std::size_t i = begin; i < end; ++i) {
            row.mean_reward += steps[i].reward;
            row.mean_utility += steps[i].utility;
            row.mean_se += steps[i].se;
            for (std::size_t n = 0; n < n_slices; ++n)
                row.mean_ssr[n] += steps[i].ssr[n];
        }
        const double inv = 1.0 / static_cast<double>(round_size);
        row.mean_reward *= inv;
        row.mean_utility *= inv;
        row.mean_se *= inv;
        for (double &v : row.mean_ssr)
            v *= inv;
        row.cum_real = steps[end - 1].t + 1;
        row.cum_twin = twin_counts.empty() ? 0 : twin_counts[end - 1];
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace dtslice::io
