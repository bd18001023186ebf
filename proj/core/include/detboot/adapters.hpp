#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "detboot/mixture.hpp"

namespace detboot {

/// Block bookkeeping for the moving block bootstrap. n = b*l observations,
/// block_means holds the n-l+1 consecutive window means, grand_mean their
/// average.
struct BlockStatistics {
    std::int64_t block_length = 0;
    std::int64_t block_count = 0;
    std::vector<double> block_means;
    double grand_mean = 0.0;
};

struct MovingBlockResult {
    MixtureSpec spec;
    BlockStatistics stats;
};

/// Efron bootstrap of the centered, sqrt(n)-normed sample mean:
///   T_n* = sum_i (1/sqrt(n)) * (X_i* - mean(X)),  P*(X_i* = X_j) = 1/n.
/// The centering is folded into the atoms (values - mean), which keeps the
/// support width tight; the spec shift stays zero.
MixtureSpec efron_mean(std::span<const double> values);

/// Moving block bootstrap of the mean for an m-dependent series:
///   T_n* = sqrt(b) * (1/b) * sum_k V_k*,
/// a mixture of b = n/l components, each uniform over the n-l+1 centered
/// consecutive block means, coefficient 1/sqrt(b). Requires l to divide n
/// exactly. Choosing l larger than the series' dependence order is the
/// caller's responsibility; it cannot be validated from the data.
MovingBlockResult moving_block(std::span<const double> values, std::int64_t block_length);

}  // namespace detboot
