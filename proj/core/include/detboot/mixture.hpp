#pragma once

#include <utility>
#include <vector>

#include "detboot/charfn.hpp"
#include "detboot/discrete.hpp"
#include "detboot/inversion.hpp"

namespace detboot {

/// One term a_j * X^[j] of a linear mixture.
struct MixtureComponent {
    double coefficient;
    DiscreteDistribution dist;
};

/// Z = sum_j a_j X^[j] + shift, with independent finitely-discrete X^[j].
/// The shift carries deterministic centering constants (e.g. -sqrt(n)*mean)
/// symbolically: it translates the output grid and never enters the
/// characteristic product.
struct MixtureSpec {
    std::vector<MixtureComponent> components;
    double shift = 0.0;

    std::int64_t width() const { return static_cast<std::int64_t>(components.size()); }
    void validate() const;
};

/// Exact support of Z including the shift. Computed per component:
/// each a_j contributes a_j*max(atoms_j) to the upper bound when a_j > 0 and
/// a_j*min(atoms_j) otherwise (mirrored for the lower bound). Reduces to the
/// shared-distribution sign-split formula when all components coincide.
SupportBounds support_bounds(const MixtureSpec& spec);

/// Result of the end-to-end pipeline.
struct MixtureDistribution {
    GridDensity density;
    GridCdf cdf;
    SupportBounds support;
};

/// Full pipeline: support bounds, per-component characteristic vectors
/// (components with identical coefficient and distribution are grouped and
/// routed through the fast repeated-power path), characteristic product,
/// inverse FFT, CDF accumulation.
///
/// Degenerate mixtures (support width zero, e.g. constant statistics) short-
/// circuit to a point mass in the first bin of a width-one grid.
///
/// Deterministic: identical spec and config give bitwise-identical output,
/// and permuting components does not change the result (components are
/// grouped in a canonical order before the product).
MixtureDistribution compute_distribution(const MixtureSpec& spec, const GridConfig& cfg);

/// Re-atomize a binned density so it can feed another mixture stage: one atom
/// per bin at the bin center, mass max(bins[i], 0), atoms with mass below
/// mass_floor dropped, masses renormalized. The quantization error is one
/// grid step per cascade stage. Throws AllMassDropped when less than half
/// the mass survives clamping and flooring.
DiscreteDistribution cascade_atomize(const GridDensity& d, double mass_floor = 1e-12);

}  // namespace detboot
