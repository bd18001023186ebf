#pragma once

#include <cstdint>
#include <vector>

#include "detboot/charfn.hpp"
#include "detboot/discrete.hpp"

namespace detboot {

/// Binned density over [z_L, z_L + T): bins[i] approximates the probability
/// mass in [z_L + i*T/N, z_L + (i+1)*T/N). z_L is the grid-aligned left edge
/// of the bin containing the mixture's lower support bound. Bin values sum
/// to one but individual bins may dip slightly negative off-grid (spectral
/// leakage); values below about -0.05 signal a mis-assembled pipeline.
struct GridDensity {
    double z_L = 0.0;
    double T = 0.0;
    std::vector<double> bins;

    std::int64_t size() const { return static_cast<std::int64_t>(bins.size()); }
    double bin_width() const { return T / static_cast<double>(bins.size()); }
    double bin_left(std::int64_t i) const { return z_L + static_cast<double>(i) * bin_width(); }
    double bin_right(std::int64_t i) const {
        return z_L + static_cast<double>(i + 1) * bin_width();
    }
    double bin_center(std::int64_t i) const {
        return z_L + (static_cast<double>(i) + 0.5) * bin_width();
    }
    double total_mass() const;
    /// Mean of the binned distribution (bin centers weighted by bin mass).
    double mean() const;
};

/// Cumulative distribution on the same grid: cum[i] approximates
/// F_Z(z_L + (i+1)*T/N), i.e. F at the right edge of bin i. Non-decreasing,
/// clamped to [0, 1], last entry exactly one.
struct GridCdf {
    double z_L = 0.0;
    double T = 0.0;
    std::vector<double> cum;

    std::int64_t size() const { return static_cast<std::int64_t>(cum.size()); }
    double bin_width() const { return T / static_cast<double>(cum.size()); }
    double right_edge(std::int64_t i) const {
        return z_L + static_cast<double>(i + 1) * bin_width();
    }
    /// F evaluated at an arbitrary point (step function, right-continuous).
    double value_at(double z) const;
};

/// Rotation that brings the wrap-around DFT bins into natural z order:
/// i_min = floor(z_L * N / T) mod N, origin = floor(z_L * N / T) * (T / N).
/// The origin is the left edge of the bin containing z_L; it coincides with
/// z_L whenever z_L is grid-aligned. Shared by the inversion and by the
/// enumeration oracle so both bin into the identical grid.
struct GridFrame {
    std::int64_t i_min = 0;
    double origin = 0.0;
};
GridFrame grid_frame(double z_l, double period, std::int64_t n);

/// Invert a mixture characteristic vector to a binned density.
///
/// The N frequency samples g_k live at -2*pi*k/T for k = 0..N-1. A discrete
/// law is not band-limited, so the upper half of that range aliases the
/// negative frequencies: reconstruction uses g_k for k <= N/2 and the
/// conjugate reflection conj(g_{N-k}) above (Nyquist sample forced real for
/// even N). The result of the inverse FFT is then real, bins sum to g_0 = 1
/// exactly, and a mixture whose outcomes are all grid-aligned reproduces its
/// exact atom masses. Bins are rotated by i_min into natural z order.
///
/// N need not be a power of two; sub-64 lengths fall back to the direct DFT
/// and other non-power-of-two lengths go through Bluestein.
GridDensity invert_to_density(const CharVector& g, const SupportBounds& support);

/// Accumulate bins into a CDF: running sum, monotone-rectified (running max)
/// and clamped to [0, 1]; the final entry is forced to exactly one. Throws
/// TotalMassError if the density's mass deviates from one by more than 1e-6.
GridCdf density_to_cdf(const GridDensity& d);

/// Deterministic quantile: smallest right edge whose CDF value reaches alpha,
///   quantile(c, a) = z_L + (i*+1)*T/N, i* = min{i : cum[i] >= a}.
double quantile(const GridCdf& c, double alpha);

}  // namespace detboot
