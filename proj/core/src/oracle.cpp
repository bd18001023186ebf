#include "detboot/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "detboot/errors.hpp"

namespace detboot {

double EmpiricalCdf::value_at(double z) const {
    const auto it = std::upper_bound(sorted_values.begin(), sorted_values.end(), z);
    return static_cast<double>(it - sorted_values.begin()) /
           static_cast<double>(sorted_values.size());
}

GridDensity brute_force_density(const MixtureSpec& spec, const GridConfig& cfg,
                                std::int64_t limit) {
    spec.validate();
    cfg.validate();

    double outcomes = 1.0;
    for (const MixtureComponent& c : spec.components) {
        outcomes *= static_cast<double>(c.dist.size());
        if (outcomes > static_cast<double>(limit))
            throw EnumerationTooLarge("outcome count exceeds the enumeration limit");
    }

    const SupportBounds support = support_bounds(spec);
    const double t_z = support.width();
    const std::int64_t n = cfg.N;

    GridDensity d;
    d.bins.assign(static_cast<std::size_t>(n), 0.0);
    double origin_unshifted;
    if (t_z == 0.0) {
        d.z_L = support.z_L;
        d.T = 1.0;
        origin_unshifted = support.z_L - spec.shift;
    } else {
        d.T = cfg.period_for(t_z);
        const GridFrame frame = grid_frame(support.z_L - spec.shift, d.T, n);
        origin_unshifted = frame.origin;
        d.z_L = frame.origin + spec.shift;
    }
    const double width = d.T / static_cast<double>(n);

    // Mixed-radix counter over all outcome tuples; probabilities accumulate
    // into the same wrapped grid the pipeline uses.
    const std::size_t m = spec.components.size();
    std::vector<std::size_t> idx(m, 0);
    while (true) {
        double z = 0.0;
        double p = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            const Atom& a = spec.components[j].dist.atoms()[idx[j]];
            z += spec.components[j].coefficient * a.value;
            p *= a.mass;
        }
        std::int64_t bin =
            static_cast<std::int64_t>(std::floor((z - origin_unshifted) / width)) % n;
        if (bin < 0) bin += n;
        d.bins[static_cast<std::size_t>(bin)] += p;

        std::size_t j = 0;
        for (; j < m; ++j) {
            if (++idx[j] < spec.components[j].dist.size()) break;
            idx[j] = 0;
        }
        if (j == m) break;
    }
    return d;
}

namespace {

// splitmix64 finalizer; the stateless per-draw hash chains it over
// (seed, replicate, component).
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t replicate, std::uint64_t component) {
    const std::uint64_t h = mix64(mix64(mix64(seed) ^ replicate) ^ component);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace

EmpiricalCdf monte_carlo_cdf(const MixtureSpec& spec, std::int64_t replicates,
                             std::uint64_t seed) {
    spec.validate();
    if (replicates < 1) throw InvalidArgument("replicate count must be >= 1");

    // Per-component cumulative masses for inverse-CDF sampling.
    const std::size_t m = spec.components.size();
    std::vector<std::vector<double>> cum(m);
    for (std::size_t j = 0; j < m; ++j) {
        double running = 0.0;
        cum[j].reserve(spec.components[j].dist.size());
        for (const Atom& a : spec.components[j].dist.atoms()) {
            running += a.mass;
            cum[j].push_back(running);
        }
        cum[j].back() = 1.0;
    }

    EmpiricalCdf out;
    out.sorted_values.resize(static_cast<std::size_t>(replicates));
    for (std::int64_t b = 0; b < replicates; ++b) {
        double z = spec.shift;
        for (std::size_t j = 0; j < m; ++j) {
            const double u =
                uniform01(seed, static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(j));
            const auto it = std::upper_bound(cum[j].begin(), cum[j].end(), u);
            const std::size_t pick = std::min<std::size_t>(it - cum[j].begin(), cum[j].size() - 1);
            z += spec.components[j].coefficient * spec.components[j].dist.atoms()[pick].value;
        }
        out.sorted_values[static_cast<std::size_t>(b)] = z;
    }
    std::sort(out.sorted_values.begin(), out.sorted_values.end());
    return out;
}

namespace {

// Breakpoints of a right-continuous step CDF.
std::vector<double> breakpoints(const GridCdf& c) {
    std::vector<double> pts(static_cast<std::size_t>(c.size()));
    for (std::int64_t i = 0; i < c.size(); ++i) pts[static_cast<std::size_t>(i)] = c.right_edge(i);
    return pts;
}

std::vector<double> breakpoints(const EmpiricalCdf& c) { return c.sorted_values; }

template <typename A, typename B>
double ks_impl(const A& a, const B& b) {
    double sup = 0.0;
    for (double z : breakpoints(a)) sup = std::max(sup, std::abs(a.value_at(z) - b.value_at(z)));
    for (double z : breakpoints(b)) sup = std::max(sup, std::abs(a.value_at(z) - b.value_at(z)));
    return sup;
}

}  // namespace

double ks_distance(const GridCdf& a, const GridCdf& b) { return ks_impl(a, b); }
double ks_distance(const GridCdf& a, const EmpiricalCdf& b) { return ks_impl(a, b); }
double ks_distance(const EmpiricalCdf& a, const GridCdf& b) { return ks_impl(a, b); }
double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) { return ks_impl(a, b); }

}  // namespace detboot
