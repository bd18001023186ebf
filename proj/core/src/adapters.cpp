#include "detboot/adapters.hpp"

#include <cmath>

#include "detboot/errors.hpp"

namespace detboot {

MixtureSpec efron_mean(std::span<const double> values) {
    if (values.empty()) throw EmptySample();
    const std::size_t n = values.size();
    double mean = 0.0;
    for (double v : values) {
        if (!std::isfinite(v)) throw NonFiniteValue("sample value is not finite");
        mean += v;
    }
    mean /= static_cast<double>(n);

    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = values[i] - mean;
    const DiscreteDistribution dist = DiscreteDistribution::from_sample(centered);
    const double coeff = 1.0 / std::sqrt(static_cast<double>(n));

    MixtureSpec spec;
    spec.components.assign(n, {coeff, dist});
    return spec;
}

MovingBlockResult moving_block(std::span<const double> values, std::int64_t block_length) {
    if (values.empty()) throw EmptySample();
    const std::int64_t n = static_cast<std::int64_t>(values.size());
    if (block_length < 1 || n % block_length != 0)
        throw BlockLengthMismatch("block length must divide the sample size");
    for (double v : values)
        if (!std::isfinite(v)) throw NonFiniteValue("sample value is not finite");

    BlockStatistics stats;
    stats.block_length = block_length;
    stats.block_count = n / block_length;
    stats.block_means.resize(static_cast<std::size_t>(n - block_length + 1));
    for (std::int64_t i = 0; i + block_length <= n; ++i) {
        double s = 0.0;
        for (std::int64_t j = 0; j < block_length; ++j)
            s += values[static_cast<std::size_t>(i + j)];
        stats.block_means[static_cast<std::size_t>(i)] = s / static_cast<double>(block_length);
    }
    double grand = 0.0;
    for (double m : stats.block_means) grand += m;
    grand /= static_cast<double>(stats.block_means.size());
    stats.grand_mean = grand;

    std::vector<double> centered(stats.block_means.size());
    for (std::size_t i = 0; i < centered.size(); ++i) centered[i] = stats.block_means[i] - grand;
    const DiscreteDistribution dist = DiscreteDistribution::from_sample(centered);
    const double coeff = 1.0 / std::sqrt(static_cast<double>(stats.block_count));

    MovingBlockResult out;
    out.stats = std::move(stats);
    out.spec.components.assign(static_cast<std::size_t>(out.stats.block_count), {coeff, dist});
    return out;
}

}  // namespace detboot
