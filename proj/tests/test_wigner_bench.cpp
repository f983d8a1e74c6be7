#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oscbath/wigner_bench.hpp"

using namespace oscbath;

namespace {
const QuadratureSpec kQuad{};

// 5x5 grid spanning omega in [0.5, 2], theta in [0.1, 10]
std::vector<double> omega_grid() { return {0.5, 0.8, 1.0, 1.4, 2.0}; }
std::vector<double> theta_grid() { return {0.1, 0.4, 1.0, 3.0, 10.0}; }
}  // namespace

TEST_CASE("wigner params limits and frozen value") {
    CHECK(wigner_params(1.0, 1e-6).a_inv == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(wigner_params(1.0, 1e3).a_inv == doctest::Approx(1e3).epsilon(1e-6));
    const WignerParams p = wigner_params(1.0, 0.5);
    CHECK(p.a_inv == doctest::Approx(0.65651764274966565).epsilon(1e-14));
    CHECK(p.a_inv >= p.omega_tilde / 2.0);
    CHECK(p.norm_n > 0.0);
    CHECK(p.n1 == doctest::Approx(2.0 * std::tanh(1.0)).epsilon(1e-14));
}

TEST_CASE("wigner value peaks at the origin") {
    const WignerParams p = wigner_params(1.3, 0.7);
    CHECK(wigner_value(0.0, 0.0, p) == doctest::Approx(p.norm_n).epsilon(1e-15));
    CHECK(wigner_value(1.0, -2.0, p) < p.norm_n);
    CHECK(wigner_value(1.0, -2.0, p) > 0.0);
}

TEST_CASE("normalization and mean energy on the grid") {
    for (double w : omega_grid())
        for (double th : theta_grid()) {
            const WignerParams p = wigner_params(w, th);
            CHECK(std::abs(wigner_normalization_numeric(p) - 1.0) < 1e-10);
            CHECK(std::abs(wigner_mean_energy_numeric(p) - p.a_inv) <
                  1e-8 * std::abs(p.a_inv));
        }
}

TEST_CASE("numeric wigner entropy reproduces the closed form") {
    for (double w : omega_grid())
        for (double th : theta_grid()) {
            const double num = entropy_wigner_numeric(w, th, kQuad);
            const double closed = entropy_wigner_closed(w, th);
            CHECK(std::abs(num - closed) < 1e-8);
        }
}

TEST_CASE("wigner entropy frozen values") {
    CHECK(entropy_wigner_closed(1.0, 1.0) ==
          doctest::Approx(1.0787896523453594).epsilon(1e-14));
    // theta -> 0: 1 - log 2, the third-law violation of the wrong formula
    CHECK(entropy_wigner_closed(1.0, 1e-3) ==
          doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-12));
    CHECK(entropy_wigner_numeric(1.0, 1e-3, kQuad) ==
          doctest::Approx(0.30685281944005469).epsilon(1e-7));
    // classical limit: log(theta/omega) + 1
    CHECK(entropy_wigner_closed(1.0, 1e4) ==
          doctest::Approx(std::log(1e4) + 1.0).epsilon(1e-8));
}

TEST_CASE("exact entropy frozen values and limits") {
    CHECK(entropy_exact(1.0, 0.0) == 0.0);
    CHECK(entropy_exact(1.0, 1e-4) < 1e-8);
    CHECK(entropy_exact(1.0, 1.0) == doctest::Approx(1.0406518522564083).epsilon(1e-14));
    CHECK(entropy_exact(1.0, 1e4) == doctest::Approx(std::log(1e4) + 1.0).epsilon(1e-8));
    // nondecreasing in theta, -> 0 as theta -> 0
    double prev = -1.0;
    for (double th : {1e-3, 1e-2, 1e-1, 1.0, 10.0}) {
        const double s = entropy_exact(1.0, th);
        CHECK(s >= prev);
        prev = s;
    }
    for (int k = 1; k <= 6; ++k)
        CHECK(entropy_exact(1.0, std::pow(10.0, -k)) <
              entropy_exact(1.0, std::pow(10.0, -k + 1)) + 1e-300);
}

TEST_CASE("compare entropies") {
    const auto rows = compare_entropies(1.0, {1e-3, 1.0, 100.0});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].discrepancy == doctest::Approx(0.30685281944005469).epsilon(1e-9));
    CHECK(rows[1].discrepancy == doctest::Approx(0.038137800088951100).epsilon(1e-12));
    CHECK(rows[2].discrepancy < 1e-3 * rows[2].s_exact);
    for (const auto& r : rows) CHECK(r.discrepancy >= 0.0);
    CHECK_THROWS_AS(compare_entropies(1.0, {}), ValidationError);
}

TEST_CASE("classical agreement for theta/omega >= 100") {
    for (double w : omega_grid()) {
        const double th = 100.0 * w;
        const double se = entropy_exact(w, th);
        const double sw = entropy_wigner_closed(w, th);
        CHECK(std::abs(sw - se) / se < 1e-3);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(wigner_params(0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(wigner_params(1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(entropy_exact(-1.0, 1.0), ValidationError);
}
