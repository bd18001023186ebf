#include <doctest.h>

#include <cmath>
#include <random>

#include "detboot/discrete.hpp"
#include "detboot/errors.hpp"
#include "detboot/mixture.hpp"
#include "helpers.hpp"

using namespace detboot;

TEST_CASE("from_sample: uniform weights over distinct values") {
    const std::vector<double> v{1.0, 2.0, 3.0};
    const auto d = DiscreteDistribution::from_sample(v);
    REQUIRE(d.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(d.atoms()[i].value == v[i]);
        CHECK(d.atoms()[i].mass == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
}

TEST_CASE("from_sample: duplicates merge") {
    const std::vector<double> v{1.0, 1.0, 2.0};
    const auto d = DiscreteDistribution::from_sample(v);
    REQUIRE(d.size() == 2);
    CHECK(d.atoms()[0].value == 1.0);
    CHECK(d.atoms()[0].mass == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(d.atoms()[1].value == 2.0);
    CHECK(d.atoms()[1].mass == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("from_sample: errors") {
    CHECK_THROWS_AS(DiscreteDistribution::from_sample({}), EmptySample);
    const std::vector<double> bad{1.0, std::nan("")};
    CHECK_THROWS_AS(DiscreteDistribution::from_sample(bad), NonFiniteValue);
    const std::vector<double> inf{1.0, std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(DiscreteDistribution::from_sample(inf), NonFiniteValue);
}

TEST_CASE("from_atoms: renormalizes and sorts") {
    auto d = DiscreteDistribution::from_atoms({{2.0, 3.0}, {1.0, 1.0}});
    REQUIRE(d.size() == 2);
    CHECK(d.atoms()[0].value == 1.0);
    CHECK(d.atoms()[0].mass == doctest::Approx(0.25));
    CHECK(d.atoms()[1].mass == doctest::Approx(0.75));
    CHECK_THROWS_AS(DiscreteDistribution::from_atoms({{0.0, -1.0}}), InvalidArgument);
}

TEST_CASE("transform: identity, collision, affine") {
    const auto coin = DiscreteDistribution::from_sample({0.0, 1.0});
    CHECK(coin.transform([](double x) { return x; }) == coin);

    const auto pm1 = DiscreteDistribution::from_sample({-1.0, 1.0});
    const auto sq = pm1.transform([](double x) { return x * x; });
    REQUIRE(sq.size() == 1);
    CHECK(sq.atoms()[0].value == 1.0);
    CHECK(sq.atoms()[0].mass == 1.0);

    const auto three = DiscreteDistribution::from_sample({0.0, 1.0, 2.0});
    const auto affine = three.transform([](double x) { return 2.0 * x + 1.0; });
    REQUIRE(affine.size() == 3);
    CHECK(affine.atoms()[0].value == 1.0);
    CHECK(affine.atoms()[1].value == 3.0);
    CHECK(affine.atoms()[2].value == 5.0);

    CHECK_THROWS_AS(three.transform([](double) { return std::nan(""); }), NonFiniteValue);
}

TEST_CASE("support_bounds: paper example is exact") {
    // a = (1,1,1,1,1), atoms with min 0.3872 and max 18.9123
    const auto dist = DiscreteDistribution::from_sample({0.3872, 7.5, 12.1, 18.9123});
    MixtureSpec spec;
    for (int j = 0; j < 5; ++j) spec.components.push_back({1.0, dist});
    const SupportBounds b = support_bounds(spec);
    CHECK(std::abs(b.z_L - 1.9360) <= 1e-12);
    CHECK(std::abs(b.z_U - 94.5615) <= 1e-12);
}

TEST_CASE("support_bounds: sign split and scaling") {
    const auto coin = DiscreteDistribution::from_sample({0.0, 1.0});
    MixtureSpec pm{{{1.0, coin}, {-1.0, coin}}, 0.0};
    const SupportBounds b = support_bounds(pm);
    CHECK(b.z_L == -1.0);
    CHECK(b.z_U == 1.0);

    const auto two = DiscreteDistribution::from_sample({-1.0, 3.0});
    MixtureSpec scaled{{{2.0, two}}, 0.0};
    const SupportBounds s = support_bounds(scaled);
    CHECK(s.z_L == -2.0);
    CHECK(s.z_U == 6.0);
}

TEST_CASE("support_bounds: brute-force extremes coincide exactly") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = testutil::random_hetero_spec(rng, 4, 3);
        const SupportBounds b = support_bounds(spec);
        // enumerate all outcomes
        double lo = spec.shift, hi = spec.shift;
        std::vector<std::size_t> idx(spec.components.size(), 0);
        bool first = true;
        while (true) {
            double z = spec.shift;
            for (std::size_t j = 0; j < idx.size(); ++j)
                z += spec.components[j].coefficient *
                     spec.components[j].dist.atoms()[idx[j]].value;
            lo = first ? z : std::min(lo, z);
            hi = first ? z : std::max(hi, z);
            first = false;
            std::size_t j = 0;
            for (; j < idx.size(); ++j) {
                if (++idx[j] < spec.components[j].dist.size()) break;
                idx[j] = 0;
            }
            if (j == idx.size()) break;
        }
        CHECK(lo == doctest::Approx(b.z_L).epsilon(1e-14));
        CHECK(hi == doctest::Approx(b.z_U).epsilon(1e-14));
    }
}

TEST_CASE("support_bounds: shift equivariance, exact on dyadic inputs") {
    // dyadic atoms, coefficients and offsets make every product exact
    const auto d0 = DiscreteDistribution::from_sample({-2.0, 0.5, 3.0});
    const auto d1 = DiscreteDistribution::from_sample({1.0, 4.0});
    MixtureSpec spec{{{0.5, d0}, {-2.0, d1}}, 0.0};
    const SupportBounds base = support_bounds(spec);

    const double c = 0.25;
    MixtureSpec shifted = spec;
    shifted.components[1].dist =
        d1.transform([&](double x) { return x + c; });
    const SupportBounds moved = support_bounds(shifted);
    CHECK(moved.z_L == base.z_L + shifted.components[1].coefficient * c);
    CHECK(moved.z_U == base.z_U + shifted.components[1].coefficient * c);

    MixtureSpec scaled = spec;
    for (auto& comp : scaled.components) comp.coefficient *= 2.0;
    const SupportBounds sb = support_bounds(scaled);
    CHECK(sb.z_L == 2.0 * base.z_L);
    CHECK(sb.z_U == 2.0 * base.z_U);
}

TEST_CASE("canonical distributions survive identity round trips") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        const auto d = testutil::random_dist(rng, 6);
        CHECK(d.transform([](double x) { return x; }) == d);
        double total = 0.0;
        for (const Atom& a : d.atoms()) total += a.mass;
        CHECK(std::abs(total - 1.0) <= 1e-12);
        for (std::size_t i = 1; i < d.size(); ++i)
            CHECK(d.atoms()[i - 1].value < d.atoms()[i].value);
    }
}

TEST_CASE("mixture spec validation") {
    MixtureSpec empty;
    CHECK_THROWS_AS(support_bounds(empty), InvalidArgument);
    const auto coin = DiscreteDistribution::from_sample({0.0, 1.0});
    MixtureSpec bad{{{std::nan(""), coin}}, 0.0};
    CHECK_THROWS_AS(bad.validate(), NonFiniteValue);
}
