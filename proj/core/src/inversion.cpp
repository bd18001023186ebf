#include "detboot/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "detboot/errors.hpp"
#include "detboot/fft.hpp"

namespace detboot {

double GridDensity::total_mass() const {
    double s = 0.0;
    for (double b : bins) s += b;
    return s;
}

double GridDensity::mean() const {
    double s = 0.0;
    for (std::int64_t i = 0; i < size(); ++i) s += bins[static_cast<std::size_t>(i)] * bin_center(i);
    return s;
}

double GridCdf::value_at(double z) const {
    // Step function over the known right-edge values: F(z) = cum[i] for the
    // largest i with right_edge(i) <= z, zero before the first edge.
    if (z >= right_edge(size() - 1)) return 1.0;
    std::int64_t i = static_cast<std::int64_t>(std::floor((z - z_L) / bin_width())) - 1;
    i = std::clamp<std::int64_t>(i, -1, size() - 1);
    while (i + 1 < size() && right_edge(i + 1) <= z) ++i;
    while (i >= 0 && right_edge(i) > z) --i;
    return i < 0 ? 0.0 : cum[static_cast<std::size_t>(i)];
}

GridFrame grid_frame(double z_l, double period, std::int64_t n) {
    if (!(period > 0.0)) throw InvalidPeriod("period must be positive");
    const double nd = static_cast<double>(n);
    const double q = std::floor(z_l * nd / period);
    std::int64_t i_min = static_cast<std::int64_t>(q) % n;
    if (i_min < 0) i_min += n;
    return {i_min, q * (period / nd)};
}

GridDensity invert_to_density(const CharVector& g, const SupportBounds& support) {
    const std::int64_t n = g.size();
    if (n < 1) throw InvalidArgument("char vector is empty");
    if (!(g.period > 0.0)) throw InvalidPeriod("char vector period must be positive");

    // Hermitian completion of the half spectrum (see header).
    std::vector<std::complex<double>> spec(static_cast<std::size_t>(n));
    spec[0] = g.values[0];
    for (std::int64_t k = 1; k < n; ++k) {
        if (2 * k < n)
            spec[static_cast<std::size_t>(k)] = g.values[static_cast<std::size_t>(k)];
        else if (2 * k == n)
            spec[static_cast<std::size_t>(k)] = g.values[static_cast<std::size_t>(k)].real();
        else
            spec[static_cast<std::size_t>(k)] =
                std::conj(g.values[static_cast<std::size_t>(n - k)]);
    }
    const std::vector<std::complex<double>> f = fft::inverse_dft(spec);

    const GridFrame frame = grid_frame(support.z_L, g.period, n);
    GridDensity d;
    d.z_L = frame.origin;
    d.T = g.period;
    d.bins.resize(static_cast<std::size_t>(n));
    const double scale = 1.0 / static_cast<double>(n);
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t src = (i + frame.i_min) % n;
        d.bins[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(src)].real() * scale;
    }
    return d;
}

GridCdf density_to_cdf(const GridDensity& d) {
    const double mass = d.total_mass();
    if (std::abs(mass - 1.0) > 1e-6)
        throw TotalMassError("density mass deviates from one by more than 1e-6");

    GridCdf c;
    c.z_L = d.z_L;
    c.T = d.T;
    c.cum.resize(d.bins.size());
    double running = 0.0;
    double high = 0.0;
    for (std::size_t i = 0; i < d.bins.size(); ++i) {
        running += d.bins[i];
        high = std::max(high, running);
        c.cum[i] = std::min(high, 1.0);
    }
    c.cum.back() = 1.0;
    return c;
}

double quantile(const GridCdf& c, double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw AlphaOutOfRange("quantile level must lie strictly in (0, 1)");
    const auto it = std::lower_bound(c.cum.begin(), c.cum.end(), alpha);
    const std::int64_t i = it == c.cum.end() ? c.size() - 1 : it - c.cum.begin();
    return c.right_edge(i);
}

}  // namespace detboot
