#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "detboot/discrete.hpp"

namespace detboot {

/// Discretization contract for the frequency/density grid: N bins and the
/// period T the DFT wraps on. T defaults to pad * T_Z; an explicit period
/// overrides the multiplier.
struct GridConfig {
    std::int64_t N = 1000;
    double pad = 1.0;
    std::optional<double> explicit_period;

    void validate() const;
    /// Resolve the period for a mixture of support width t_z.
    double period_for(double t_z) const;
};

/// N samples of a characteristic function on the frequency grid
/// -2*pi*k/period, k = 0..N-1. values[0] is the total mass (one).
struct CharVector {
    std::vector<std::complex<double>> values;
    double period = 0.0;

    std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
};

/// Characteristic samples of one scaled component a*X:
///   g_k = sum_i p_i * exp(-2*pi*i * (a*x_i/T) * k).
/// Computed per atom by the power iteration w_i^k (one exponential per atom,
/// one complex multiply per sample), accumulated in fixed atom order.
CharVector component_char(const DiscreteDistribution& dist, double a, double period,
                          std::int64_t n);

/// Element-wise product of component vectors; all inputs must share N and
/// period.
CharVector mixture_char(const std::vector<CharVector>& components);

/// Product of m identical components, computed as one component vector
/// raised element-wise to the m-th power: O(N*n + N*m) instead of O(N*m*n).
CharVector mixture_char_fast(const DiscreteDistribution& dist, double a, std::int64_t m,
                             double period, std::int64_t n);

}  // namespace detboot
