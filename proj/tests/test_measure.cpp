#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "divkit/measure.hpp"
#include "divkit/rng.hpp"

using namespace divkit;

namespace {
const AtomSpace two = AtomSpace::indexed(2);
const AtomSpace three = AtomSpace::indexed(3);
}

TEST_CASE("atom spaces reject duplicates and emptiness") {
    CHECK_THROWS_AS(AtomSpace({}), std::invalid_argument);
    CHECK_THROWS_AS(AtomSpace({"a", "a"}), std::invalid_argument);
    CHECK(AtomSpace({"a", "b"}).size() == 2);
    CHECK(AtomSpace::indexed(3).labels() == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("measure construction validates weights") {
    CHECK_THROWS_AS(FiniteMeasure(two, {1.0, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(SignedMeasure(two, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SignedMeasure(two, {1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(SignedMeasure(two, {1.0, std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
    CHECK(SignedMeasure(two, {2.0, -3.0}).mass() == -1.0);
}

TEST_CASE("integrate") {
    FiniteMeasure mu(two, {1.0, 2.0});
    CHECK(integrate(mu, std::vector<double>{1.0, 1.0}) == 3.0);  // total mass
    SignedMeasure nu(two, {2.0, -3.0});
    CHECK(integrate(nu, std::vector<double>{0.5, 0.5}) == -0.5);
    CHECK(integrate(nu, std::vector<double>{0.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(integrate(mu, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("jordan decomposition") {
    auto [p1, m1] = jordan_decompose(SignedMeasure(three, {2.0, -3.0, 0.0}));
    CHECK(p1.weights() == std::vector<double>{2.0, 0.0, 0.0});
    CHECK(m1.weights() == std::vector<double>{0.0, 3.0, 0.0});

    auto [p2, m2] = jordan_decompose(SignedMeasure(two, {1.0, 4.0}));
    CHECK(m2.weights() == std::vector<double>{0.0, 0.0});

    auto [p3, m3] = jordan_decompose(SignedMeasure(two, {-1.0, -1.0}));
    CHECK(p3.weights() == std::vector<double>{0.0, 0.0});
    CHECK(m3.weights() == std::vector<double>{1.0, 1.0});
    CHECK(p3.mass() + m3.mass() == total_variation(SignedMeasure(two, {-1.0, -1.0})));
}

TEST_CASE("lebesgue decomposition splits by the support of mu") {
    FiniteMeasure mu(three, {1.0, 0.0, 2.0});
    SignedMeasure nu(three, {3.0, -1.0, -2.0});
    LebesgueDecomposition d = lebesgue_decompose(nu, mu);
    CHECK(d.nu_a.weights() == std::vector<double>{3.0, 0.0, -2.0});
    CHECK(d.nu_s_plus.weights() == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(d.nu_s_minus.weights() == std::vector<double>{0.0, -1.0, 0.0});
    CHECK(d.reconstruct().weights() == nu.weights());

    FiniteMeasure positive(three, {1.0, 1.0, 1.0});
    LebesgueDecomposition full = lebesgue_decompose(nu, positive);
    CHECK(full.nu_a.weights() == nu.weights());
    CHECK(full.nu_s_plus.weights() == std::vector<double>{0, 0, 0});

    LebesgueDecomposition single =
        lebesgue_decompose(SignedMeasure(two, {0.5, 0.5}), FiniteMeasure(two, {1.0, 0.0}));
    CHECK(single.nu_a.weights() == std::vector<double>{0.5, 0.0});
    CHECK(single.nu_s_plus.weights() == std::vector<double>{0.0, 0.5});
    CHECK(single.nu_s_minus.weights() == std::vector<double>{0.0, 0.0});

    CHECK_THROWS_AS(lebesgue_decompose(SignedMeasure(two, {1, 1}), FiniteMeasure(three, {1, 1, 1})),
                    std::invalid_argument);
}

TEST_CASE("radon-nikodym") {
    FiniteMeasure mu(two, {2.0, 2.0});
    CHECK(radon_nikodym(SignedMeasure(two, {1.0, 3.0}), mu).values ==
          std::vector<double>{0.5, 1.5});
    CHECK(radon_nikodym(mu.as_signed(), mu).values == std::vector<double>{1.0, 1.0});
    // value on a mu-null atom is 0 by convention
    FiniteMeasure half(two, {1.0, 0.0});
    CHECK(radon_nikodym(SignedMeasure(two, {4.0, 0.0}), half).values ==
          std::vector<double>{4.0, 0.0});
    CHECK_THROWS_AS(radon_nikodym(SignedMeasure(two, {4.0, 1.0}), half), std::invalid_argument);
}

TEST_CASE("radon-nikodym reproduces integrals against mu") {
    SplitRng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng.uniform_index(5);
        AtomSpace space = AtomSpace::indexed(n);
        std::vector<double> mw(n), aw(n), g(n), dg(n);
        for (std::size_t i = 0; i < n; ++i) {
            mw[i] = rng.bernoulli(0.3) ? 0.0 : rng.uniform(0.2, 2.0);
            aw[i] = mw[i] > 0 ? rng.uniform(-2, 2) : 0.0;
            g[i] = rng.uniform(-2, 2);
        }
        FiniteMeasure mu(space, mw);
        SignedMeasure nu_a(space, aw);
        Density d = radon_nikodym(nu_a, mu);
        for (std::size_t i = 0; i < n; ++i) dg[i] = d.values[i] * g[i];
        CHECK(integrate(nu_a, g) == doctest::Approx(integrate(mu, dg)).epsilon(1e-12));
    }
}

TEST_CASE("apply_density") {
    SignedMeasure nu(two, {3.0, 5.0});
    CHECK(apply_density(std::vector<double>{1.0, 1.0}, nu).weights() == nu.weights());
    CHECK(apply_density(std::vector<double>{0.0, 0.0}, nu).weights() ==
          std::vector<double>{0.0, 0.0});
    CHECK(apply_density(std::vector<double>{2.0, 0.0}, nu).weights() ==
          std::vector<double>{6.0, 0.0});
    CHECK_THROWS_AS(apply_density(std::vector<double>{-1.0, 0.0}, nu), std::invalid_argument);
    // integrate(f m, g) = integrate(m, f g)
    std::vector<double> f{0.5, 2.0}, g{1.0, -1.0}, fg{0.5, -2.0};
    CHECK(integrate(apply_density(f, nu), g) == integrate(nu, fg));
}

TEST_CASE("lebesgue round trip is exact on random instances") {
    SplitRng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.uniform_index(6);
        AtomSpace space = AtomSpace::indexed(n);
        std::vector<double> mw(n), nw(n);
        for (std::size_t i = 0; i < n; ++i) {
            mw[i] = rng.bernoulli(0.4) ? 0.0 : rng.uniform(0.0, 2.0);
            nw[i] = rng.uniform(-2, 2);
        }
        FiniteMeasure mu(space, mw);
        SignedMeasure nu(space, nw);
        LebesgueDecomposition d = lebesgue_decompose(nu, mu);
        CHECK(d.reconstruct().weights() == nu.weights());  // componentwise, no tolerance
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(d.nu_s_plus.weight(i) >= 0);
            CHECK(d.nu_s_minus.weight(i) <= 0);
            CHECK((d.nu_s_plus.weight(i) == 0 || d.nu_s_minus.weight(i) == 0));
        }
    }
}

TEST_CASE("total variation") {
    CHECK(total_variation(SignedMeasure(two, {2.0, -3.0})) == 5.0);
    CHECK(total_variation(SignedMeasure(two, {0.0, 0.0})) == 0.0);
    CHECK(total_variation(SignedMeasure(two, {1.0, 2.0})) == 3.0);  // equals the mass
}
