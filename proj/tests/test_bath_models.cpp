#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oscbath/bath_models.hpp"

using namespace oscbath;
using cplx = std::complex<double>;

TEST_CASE("ohmic memory transform is the constant gamma") {
    const BathSpec bath = OhmicBath{0.1};
    const cplx v = memory_transform(bath, 3.7);
    CHECK(v.real() == doctest::Approx(0.1));
    CHECK(v.imag() == 0.0);
    CHECK(memory_transform_derivative(bath, 3.7) == cplx{0.0, 0.0});
}

TEST_CASE("drude memory transform") {
    const BathSpec bath = DrudeBath{0.1, 10.0};
    const cplx v = memory_transform(bath, 1.0);
    const cplx expect = 0.1 / (1.0 - cplx{0.0, 0.1});
    CHECK(std::abs(v - expect) < 1e-15);
    // finite-difference check of the derivative
    const double h = 1e-6;
    const cplx fd = (memory_transform(bath, 1.0 + h) - memory_transform(bath, 1.0 - h)) /
                    (2.0 * h);
    CHECK(std::abs(memory_transform_derivative(bath, 1.0) - fd) < 1e-9);
}

TEST_CASE("discrete partial fractions off resonance") {
    DiscreteBath d;
    d.modes = {{1.0, 2.0}};
    // eta -> 0 sequence approaches -(4/3) i at omega = 1
    for (double eta : {1e-6, 1e-8, 1e-9}) {
        d.eta_tilde = eta;
        const cplx v = memory_transform(BathSpec{d}, 1.0);
        CHECK(std::abs(v - cplx{0.0, -4.0 / 3.0}) < 10.0 * eta);
    }
}

TEST_CASE("discrete at omega = 0 vanishes like eta") {
    DiscreteBath d;
    d.modes = {{1.0, 2.0}};
    d.eta_tilde = 1e-6;
    const cplx v = memory_transform(BathSpec{d}, 0.0);
    CHECK(v.real() == doctest::Approx(1e-6).epsilon(1e-6));
    CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("lower half plane rejected") {
    const BathSpec bath = OhmicBath{0.1};
    CHECK_THROWS_AS(memory_transform(bath, cplx{1.0, -0.1}), std::domain_error);
    CHECK_THROWS_AS(memory_transform_derivative(bath, cplx{1.0, -0.1}), std::domain_error);
}

TEST_CASE("validate") {
    CHECK(validate(OhmicBath{0.1}).empty());
    auto v = validate(OhmicBath{0.0});
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "gamma_tilde must be > 0");
    DiscreteBath d;
    d.eta_tilde = 1e-6;
    v = validate(BathSpec{d});
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "modes nonempty");
    CHECK(validate(DrudeBath{0.1, -1.0}).size() == 1);
    CHECK_THROWS_AS(require_valid(OhmicBath{-0.5}), ValidationError);
}

TEST_CASE("reality condition mu(-w)* = mu(w) on a +/- grid") {
    DiscreteBath d;
    d.modes = {{0.5, 0.8}, {0.2, 2.5}};
    d.eta_tilde = 1e-4;
    const BathSpec baths[] = {OhmicBath{0.3}, DrudeBath{0.3, 10.0}, BathSpec{d}};
    for (const auto& bath : baths)
        for (int k = -30; k <= 30; k += 3) {
            const double w = std::pow(10.0, k / 10.0);
            const cplx plus = memory_transform(bath, w);
            const cplx minus = memory_transform(bath, -w);
            CHECK(std::abs(std::conj(minus) - plus) < 1e-12 * (1.0 + std::abs(plus)));
        }
}

TEST_CASE("passivity: Re mu > 0 on a log grid") {
    for (int k = -30; k <= 30; ++k) {
        const double w = std::pow(10.0, k / 10.0);
        CHECK(memory_transform(OhmicBath{0.1}, w).real() > 0.0);
        const double re = memory_transform(DrudeBath{0.1, 10.0}, w).real();
        CHECK(re > 0.0);
        CHECK(re == doctest::Approx(0.1 / (1.0 + w * w / 100.0)).epsilon(1e-12));
    }
}

TEST_CASE("resonance hints") {
    CHECK(resonance_hints(OhmicBath{0.1}).empty());
    DiscreteBath d;
    d.modes = {{1.0, 2.0}, {1.0, 3.5}};
    const auto h = resonance_hints(BathSpec{d});
    REQUIRE(h.size() == 2);
    CHECK(h[0] == 2.0);
    CHECK(h[1] == 3.5);
}
