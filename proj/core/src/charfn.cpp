#include "detboot/charfn.hpp"

#include <cmath>
#include <numbers>

#include "detboot/errors.hpp"

namespace detboot {

void GridConfig::validate() const {
    if (N < 1) throw InvalidArgument("grid size N must be >= 1");
    if (!(pad >= 1.0)) throw InvalidArgument("pad must be >= 1");
    if (explicit_period && !(*explicit_period > 0.0))
        throw InvalidPeriod("explicit period must be positive");
}

double GridConfig::period_for(double t_z) const {
    if (explicit_period) {
        if (*explicit_period < t_z)
            throw InvalidPeriod("explicit period is smaller than the support width");
        return *explicit_period;
    }
    return pad * t_z;
}

CharVector component_char(const DiscreteDistribution& dist, double a, double period,
                          std::int64_t n) {
    if (!(period > 0.0)) throw InvalidPeriod("period must be positive");
    if (n < 1) throw InvalidArgument("grid size N must be >= 1");

    CharVector out;
    out.period = period;
    out.values.assign(static_cast<std::size_t>(n), {0.0, 0.0});

    // Per atom: w = exp(-2*pi*i*a*x/T), then g_k += p * w^k by iterated
    // multiplication. Atom order is fixed, so the reduction is deterministic.
    for (const Atom& atom : dist.atoms()) {
        const double ang = -2.0 * std::numbers::pi * a * atom.value / period;
        const std::complex<double> w(std::cos(ang), std::sin(ang));
        std::complex<double> pw(atom.mass, 0.0);
        for (std::int64_t k = 0; k < n; ++k) {
            out.values[static_cast<std::size_t>(k)] += pw;
            pw *= w;
        }
    }
    return out;
}

CharVector mixture_char(const std::vector<CharVector>& components) {
    if (components.empty()) throw InvalidArgument("mixture needs at least one component");
    const CharVector& first = components.front();
    CharVector out;
    out.period = first.period;
    out.values.assign(first.values.size(), {1.0, 0.0});
    for (const CharVector& c : components) {
        if (c.size() != first.size() || c.period != first.period)
            throw MismatchedGrid("component char vectors differ in N or period");
        for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] *= c.values[k];
    }
    return out;
}

CharVector mixture_char_fast(const DiscreteDistribution& dist, double a, std::int64_t m,
                             double period, std::int64_t n) {
    if (m < 1) throw InvalidArgument("mixture width m must be >= 1");
    CharVector base = component_char(dist, a, period, n);
    if (m == 1) return base;
    CharVector out;
    out.period = base.period;
    out.values = base.values;
    for (std::int64_t rep = 1; rep < m; ++rep)
        for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] *= base.values[k];
    return out;
}

}  // namespace detboot
