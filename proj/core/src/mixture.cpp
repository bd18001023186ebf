#include "detboot/mixture.hpp"

#include <algorithm>
#include <cmath>

#include "detboot/errors.hpp"

namespace detboot {

void MixtureSpec::validate() const {
    if (components.empty()) throw InvalidArgument("mixture needs at least one component");
    for (const MixtureComponent& c : components)
        if (!std::isfinite(c.coefficient))
            throw NonFiniteValue("mixture coefficient is not finite");
    if (!std::isfinite(shift)) throw NonFiniteValue("mixture shift is not finite");
}

SupportBounds support_bounds(const MixtureSpec& spec) {
    spec.validate();
    double lo = spec.shift;
    double hi = spec.shift;
    for (const MixtureComponent& c : spec.components) {
        if (c.coefficient > 0.0) {
            lo += c.coefficient * c.dist.min_value();
            hi += c.coefficient * c.dist.max_value();
        } else if (c.coefficient < 0.0) {
            lo += c.coefficient * c.dist.max_value();
            hi += c.coefficient * c.dist.min_value();
        }
    }
    return {lo, hi};
}

namespace {

bool atoms_less(const DiscreteDistribution& a, const DiscreteDistribution& b) {
    return std::lexicographical_compare(
        a.atoms().begin(), a.atoms().end(), b.atoms().begin(), b.atoms().end(),
        [](const Atom& x, const Atom& y) {
            if (x.value != y.value) return x.value < y.value;
            return x.mass < y.mass;
        });
}

struct Group {
    const MixtureComponent* rep;
    std::int64_t count;
};

// Group identical (coefficient, distribution) pairs and order the groups
// canonically so that component permutations cannot change the product order.
std::vector<Group> canonical_groups(const MixtureSpec& spec) {
    std::vector<Group> groups;
    for (const MixtureComponent& c : spec.components) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
            return g.rep->coefficient == c.coefficient && g.rep->dist == c.dist;
        });
        if (it == groups.end())
            groups.push_back({&c, 1});
        else
            ++it->count;
    }
    std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        if (a.rep->coefficient != b.rep->coefficient)
            return a.rep->coefficient < b.rep->coefficient;
        return atoms_less(a.rep->dist, b.rep->dist);
    });
    return groups;
}

}  // namespace

MixtureDistribution compute_distribution(const MixtureSpec& spec, const GridConfig& cfg) {
    spec.validate();
    cfg.validate();

    const SupportBounds support = support_bounds(spec);
    const double t_z = support.width();
    const std::int64_t n = cfg.N;

    if (t_z == 0.0) {
        // Constant statistic: all outcomes equal support.z_L. The paper's
        // formulas divide by T_Z, so emit the point mass directly on a
        // width-one grid.
        GridDensity d;
        d.z_L = support.z_L;
        d.T = 1.0;
        d.bins.assign(static_cast<std::size_t>(n), 0.0);
        d.bins[0] = 1.0;
        return {d, density_to_cdf(d), support};
    }

    // The characteristic product is formed for the unshifted mixture; the
    // shift only translates the grid afterwards.
    const double period = cfg.period_for(t_z);
    const std::vector<Group> groups = canonical_groups(spec);
    std::vector<CharVector> parts;
    parts.reserve(groups.size());
    for (const Group& g : groups)
        parts.push_back(
            mixture_char_fast(g.rep->dist, g.rep->coefficient, g.count, period, n));
    const CharVector product = mixture_char(parts);

    const SupportBounds unshifted{support.z_L - spec.shift, support.z_U - spec.shift};
    GridDensity d = invert_to_density(product, unshifted);
    d.z_L += spec.shift;
    return {d, density_to_cdf(d), support};
}

DiscreteDistribution cascade_atomize(const GridDensity& d, double mass_floor) {
    const std::int64_t n = d.size();
    if (n < 1) throw InvalidArgument("density is empty");
    if (mass_floor < 0.0 || mass_floor >= 1.0 / static_cast<double>(n))
        throw InvalidArgument("mass_floor must lie in [0, 1/N)");

    std::vector<Atom> atoms;
    double kept = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double w = std::max(d.bins[static_cast<std::size_t>(i)], 0.0);
        if (w == 0.0 || w < mass_floor) continue;
        atoms.push_back({d.bin_center(i), w});
        kept += w;
    }
    if (kept < 0.5)
        throw AllMassDropped("less than half the density mass survives atomization");
    return DiscreteDistribution::from_atoms(std::move(atoms));
}

}  // namespace detboot
