#include "detboot/discrete.hpp"

#include <algorithm>
#include <cmath>

#include "detboot/errors.hpp"

namespace detboot {

namespace {

// Sort by value, merge equal values, renormalize to total mass one.
std::vector<Atom> canonicalize(std::vector<Atom> atoms) {
    if (atoms.empty()) throw EmptySample();
    for (const Atom& a : atoms) {
        if (!std::isfinite(a.value)) throw NonFiniteValue("atom value is not finite");
        if (!std::isfinite(a.mass) || a.mass <= 0.0)
            throw InvalidArgument("atom mass must be positive and finite");
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.value < b.value; });
    std::vector<Atom> merged;
    merged.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!merged.empty() && merged.back().value == a.value)
            merged.back().mass += a.mass;
        else
            merged.push_back(a);
    }
    double total = 0.0;
    for (const Atom& a : merged) total += a.mass;
    for (Atom& a : merged) a.mass /= total;
    return merged;
}

}  // namespace

DiscreteDistribution DiscreteDistribution::from_sample(std::span<const double> values) {
    if (values.empty()) throw EmptySample();
    std::vector<Atom> atoms;
    atoms.reserve(values.size());
    const double unit = 1.0 / static_cast<double>(values.size());
    for (double v : values) {
        if (!std::isfinite(v)) throw NonFiniteValue("sample value is not finite");
        atoms.push_back({v, unit});
    }
    DiscreteDistribution d;
    d.atoms_ = canonicalize(std::move(atoms));
    return d;
}

DiscreteDistribution DiscreteDistribution::from_atoms(std::vector<Atom> atoms) {
    DiscreteDistribution d;
    d.atoms_ = canonicalize(std::move(atoms));
    return d;
}

DiscreteDistribution DiscreteDistribution::transform(
    const std::function<double(double)>& h) const {
    std::vector<Atom> mapped;
    mapped.reserve(atoms_.size());
    for (const Atom& a : atoms_) {
        const double image = h(a.value);
        if (!std::isfinite(image)) throw NonFiniteValue("transform image is not finite");
        mapped.push_back({image, a.mass});
    }
    DiscreteDistribution d;
    d.atoms_ = canonicalize(std::move(mapped));
    return d;
}

double DiscreteDistribution::mean() const {
    double m = 0.0;
    for (const Atom& a : atoms_) m += a.mass * a.value;
    return m;
}

bool DiscreteDistribution::operator==(const DiscreteDistribution& other) const {
    if (atoms_.size() != other.atoms_.size()) return false;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i].value != other.atoms_[i].value || atoms_[i].mass != other.atoms_[i].mass)
            return false;
    return true;
}

}  // namespace detboot
