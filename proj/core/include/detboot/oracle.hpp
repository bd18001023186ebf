#pragma once

#include <cstdint>
#include <vector>

#include "detboot/inversion.hpp"
#include "detboot/mixture.hpp"

namespace detboot {

/// Empirical CDF of B draws: F(z) = #{v <= z} / B.
struct EmpiricalCdf {
    std::vector<double> sorted_values;

    std::int64_t size() const { return static_cast<std::int64_t>(sorted_values.size()); }
    double value_at(double z) const;
};

/// Exact density by full outcome enumeration, binned into the identical grid
/// (same origin, period and rotation) as compute_distribution, so
/// comparisons against the pipeline are bin-exact. Enumerating more than
/// `limit` outcomes throws EnumerationTooLarge.
GridDensity brute_force_density(const MixtureSpec& spec, const GridConfig& cfg,
                                std::int64_t limit = 10'000'000);

/// B seeded Monte Carlo draws of Z. Each draw is generated from a stateless
/// counter-based generator keyed on (seed, replicate, component), so the
/// output is reproducible and independent of evaluation order.
EmpiricalCdf monte_carlo_cdf(const MixtureSpec& spec, std::int64_t replicates,
                             std::uint64_t seed);

/// Kolmogorov-Smirnov distance: sup over both inputs' breakpoints (grid right
/// edges resp. sample values) of |F_a - F_b|. Symmetric, in [0, 1].
double ks_distance(const GridCdf& a, const GridCdf& b);
double ks_distance(const GridCdf& a, const EmpiricalCdf& b);
double ks_distance(const EmpiricalCdf& a, const GridCdf& b);
double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);

}  // namespace detboot
