#pragma once

#include <functional>
#include <span>
#include <vector>

namespace detboot {

/// One weighted atom of a finite discrete distribution.
struct Atom {
    double value;
    double mass;
};

/// Finite discrete distribution in canonical form: atom values strictly
/// increasing, all masses positive, masses summing to one. Values are
/// immutable after construction, so instances can be shared freely.
class DiscreteDistribution {
public:
    /// Empirical distribution of a raw sample: each distinct value carries
    /// mass multiplicity/n.
    static DiscreteDistribution from_sample(std::span<const double> values);

    /// General weighted construction. Weights need not sum to one; they are
    /// renormalized. Atoms with equal values are merged.
    static DiscreteDistribution from_atoms(std::vector<Atom> atoms);

    /// Image distribution under a pointwise map h. Colliding images are
    /// merged, the result is re-canonicalized.
    DiscreteDistribution transform(const std::function<double(double)>& h) const;

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    double min_value() const { return atoms_.front().value; }
    double max_value() const { return atoms_.back().value; }
    double mean() const;

    bool operator==(const DiscreteDistribution& other) const;

private:
    DiscreteDistribution() = default;
    std::vector<Atom> atoms_;
};

/// Exact support interval of a mixture; T_Z = z_U - z_L.
struct SupportBounds {
    double z_L;
    double z_U;
    double width() const { return z_U - z_L; }
};

}  // namespace detboot
