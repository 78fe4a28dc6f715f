#include "doctest.h"

#include "lif/constants.hpp"
#include "lif/quadrature.hpp"

#include <cmath>

using namespace lif;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("polynomials are exact") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return x * x * x * x * x; }, -1.0, 2.0, 1e-12) ==
          doctest::Approx(10.5).epsilon(1e-13));
}

TEST_CASE("smooth transcendental integrands") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, pi, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-13) ==
          doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
}

TEST_CASE("peaked integrand forces subdivision") {
    // Lorentzian of width 1e-3 centered mid-interval
    const double g = 1e-3;
    const double v = integrate(
        [g](double x) { return g / (g * g + (x - 0.5) * (x - 0.5)); }, 0.0, 1.0, 1e-12);
    const double exact = std::atan(0.5 / g) - std::atan(-0.5 / g);
    CHECK(v == doctest::Approx(exact).epsilon(1e-11));
}

TEST_CASE("empty and inverted intervals give zero") {
    CHECK(integrate([](double x) { return x; }, 1.0, 1.0, 1e-12) == 0.0);
    CHECK(integrate([](double x) { return x; }, 2.0, 1.0, 1e-12) == 0.0);
}

TEST_CASE("semi-infinite decaying integrals") {
    CHECK(integrate_decaying([](double x) { return std::exp(-x); }, 0.0, 1e-13) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // int_0^inf x^2 e^{-x} = 2
    CHECK(integrate_decaying([](double x) { return x * x * std::exp(-x); }, 0.0, 1e-13) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // shifted start: int_3^inf e^{-x} = e^{-3}
    CHECK(integrate_decaying([](double x) { return std::exp(-x); }, 3.0, 1e-15) ==
          doctest::Approx(std::exp(-3.0)).epsilon(1e-12));
}

TEST_CASE("identically zero integrand terminates") {
    CHECK(integrate_decaying([](double) { return 0.0; }, 0.0, 1e-12) == 0.0);
}

TEST_SUITE_END();
