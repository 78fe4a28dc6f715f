#include "doctest.h"

#include "lif/constants.hpp"
#include "lif/matsubara.hpp"
#include "lif/nernst.hpp"
#include "lif/specfunc.hpp"

#include <cmath>
#include <stdexcept>

using namespace lif;

namespace {

DcStudyConfig make_study(double sigma_ref, double b) {
    const PlateConfig base(DielectricModel::constant(11.66),
                           DielectricModel::constant(3.84), 4e-7, 300.0);
    return DcStudyConfig(base, {sigma_ref, b}, {sigma_ref, b});
}

} // namespace

TEST_SUITE_BEGIN("nernst");

TEST_CASE("dc-augmented base models are rejected") {
    const auto dc = DielectricModel::dc_augmented(DielectricModel::constant(3.84), 1e2);
    const PlateConfig bad(dc, DielectricModel::constant(3.84), 4e-7, 300.0);
    CHECK_THROWS_AS(DcStudyConfig(bad, {1.0, 0.0}, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("zero conductivity reproduces the plain free energy") {
    const auto study = make_study(0.0, 0.0);
    CHECK(free_energy_with_dc(study, 300.0, 1e-10) ==
          doctest::Approx(free_energy(study.base, 1e-10)).epsilon(1e-11));
}

TEST_CASE("dc conductivity strengthens the attraction") {
    const auto study = make_study(53.3, 300.0);
    for (double T : {50.0, 150.0, 300.0}) {
        const double ft = free_energy_with_dc(study, T, 1e-9);
        const double f = free_energy(PlateConfig(study.base.model1, study.base.model2,
                                                 study.base.a, T),
                                     1e-9);
        CHECK(ft <= f);
    }
}

TEST_CASE("the dc free-energy shift approaches the closed bracket at low T") {
    // F~ - F -> -(k_B T / 16 pi a^2)[zeta(3) - Li3(r1 r2)] + R with R
    // exponentially small
    const auto study = make_study(53.3, 300.0);
    const double a = study.base.a;
    const double T = 10.0;
    const double ft = free_energy_with_dc(study, T, 1e-11);
    const double f = free_energy(
        PlateConfig(study.base.model1, study.base.model2, a, T), 1e-11);
    const double r = (11.66 - 1.0) / (11.66 + 1.0) * (3.84 - 1.0) / (3.84 + 1.0);
    const double bracket = -k_boltzmann * T / (16.0 * pi * a * a) *
                           (zeta3 - polylog(3, r));
    CHECK(ft - f == doctest::Approx(bracket).epsilon(1e-6));
}

TEST_CASE("entropy residual closed form") {
    const double a = 4e-7;
    const double v = entropy_residual_at_zero(11.66, 3.84, a);
    CHECK(v > 0.0);
    // vacuum plate 1: Li3(0) = 0
    CHECK(entropy_residual_at_zero(1.0, 3.84, a) ==
          doctest::Approx(k_boltzmann / (16.0 * pi * a * a) * zeta3).epsilon(1e-14));
    // a^-2 scaling
    CHECK(entropy_residual_at_zero(11.66, 3.84, 2.0 * a) ==
          doctest::Approx(0.25 * v).epsilon(1e-14));
    CHECK_THROWS_AS(entropy_residual_at_zero(0.5, 3.84, a), std::domain_error);
}

TEST_CASE("entropy with dc reduces to the plain entropy at zero conductivity") {
    const auto study = make_study(0.0, 0.0);
    const PlateConfig plain(study.base.model1, study.base.model2, study.base.a, 300.0);
    CHECK(entropy_with_dc(study, 300.0) ==
          doctest::Approx(entropy(plain)).epsilon(1e-6));
}

TEST_CASE("remainder is zero for zero conductivity") {
    const auto study = make_study(0.0, 0.0);
    const auto r = remainder_R(study, 300.0, 1e-8);
    CHECK(r.value == 0.0);
    CHECK_FALSE(r.underflow);
}

TEST_CASE("remainder underflows to exact zero at tiny T") {
    // b/T > 745 drives exp(-b/T) below the double range
    const auto study = make_study(53.3, 300.0);
    const auto r = remainder_R(study, 0.3, 1e-8);
    CHECK(r.value == 0.0);
    CHECK(r.underflow);
}

TEST_CASE("remainder direct sum approaches the logarithmic asymptote") {
    // fixed conductivity (b = 0) isolates the tau dependence; at small tau the
    // direct evaluation and the leading ln(tau) form agree to the stated
    // 1/ln(tau) correction level
    const double a = 4e-7;
    const double T_001 = 0.01 / tau_of(a, 1.0);
    const PlateConfig base(DielectricModel::constant(11.66),
                           DielectricModel::constant(3.84), a, T_001);
    const DcStudyConfig study(base, {1e3, 0.0}, {1e3, 0.0});
    const auto r = remainder_R(study, T_001, 1e-8);
    CHECK(r.value != 0.0);
    CHECK(r.value / r.asymptotic == doctest::Approx(1.0).epsilon(0.25));
    CHECK(r.second_order_bound <= std::abs(r.value));
}

TEST_SUITE_END();
