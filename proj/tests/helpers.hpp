#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "detboot/discrete.hpp"
#include "detboot/mixture.hpp"

namespace testutil {

inline std::vector<double> random_values(std::mt19937_64& rng, int n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = u(rng);
    return v;
}

inline detboot::DiscreteDistribution random_dist(std::mt19937_64& rng, int n, double lo = -5.0,
                                                 double hi = 5.0) {
    return detboot::DiscreteDistribution::from_sample(random_values(rng, n, lo, hi));
}

/// Random mixture with one shared component distribution and per-component
/// coefficients of magnitude in [0.5, 2] and random sign.
inline detboot::MixtureSpec random_shared_spec(std::mt19937_64& rng, int n, int m) {
    const detboot::DiscreteDistribution dist = random_dist(rng, n);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::bernoulli_distribution flip(0.5);
    detboot::MixtureSpec spec;
    for (int j = 0; j < m; ++j) {
        const double a = mag(rng) * (flip(rng) ? 1.0 : -1.0);
        spec.components.push_back({a, dist});
    }
    return spec;
}

/// Random mixture where every component has its own distribution.
inline detboot::MixtureSpec random_hetero_spec(std::mt19937_64& rng, int n_max, int m) {
    std::uniform_int_distribution<int> nn(1, n_max);
    std::uniform_real_distribution<double> mag(0.25, 3.0);
    std::bernoulli_distribution flip(0.5);
    detboot::MixtureSpec spec;
    for (int j = 0; j < m; ++j) {
        const double a = mag(rng) * (flip(rng) ? 1.0 : -1.0);
        spec.components.push_back({a, random_dist(rng, nn(rng))});
    }
    return spec;
}

/// Mixture over random distinct integer atoms with small integer
/// coefficients; every outcome lands on the integer lattice.
inline detboot::MixtureSpec random_integer_spec(std::mt19937_64& rng, int n, int m) {
    std::uniform_int_distribution<int> atom(-12, 12);
    std::uniform_int_distribution<int> coef(1, 3);
    std::bernoulli_distribution flip(0.5);
    std::vector<double> values;
    while (static_cast<int>(values.size()) < n) {
        const double v = atom(rng);
        bool dup = false;
        for (double x : values) dup = dup || x == v;
        if (!dup) values.push_back(v);
    }
    const detboot::DiscreteDistribution dist = detboot::DiscreteDistribution::from_sample(values);
    detboot::MixtureSpec spec;
    for (int j = 0; j < m; ++j) {
        const double a = coef(rng) * (flip(rng) ? 1.0 : -1.0);
        spec.components.push_back({a, dist});
    }
    return spec;
}

inline double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
    return s;
}

}  // namespace testutil
