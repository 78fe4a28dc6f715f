#include "lif/lowtemp.hpp"
#include "lif/constants.hpp"
#include "lif/specfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace lif {

namespace {

void check_eps(double e1, double e2) {
    if (!(e1 >= 1.0) || !(e2 >= 1.0))
        throw std::domain_error("lowtemp: static permittivities must be >= 1");
}

// The Artanh term of the parallel-polarization coefficient divided by
// d = sqrt(e1) - sqrt(e2), which has a finite d -> 0 limit. kappa*d is the
// Artanh argument.
double artanh_term_over_d(double e1, double e2) {
    const double s1 = std::sqrt(e1), s2 = std::sqrt(e2);
    const double d = s1 - s2;
    const double kappa = std::sqrt(e1 + e2) / (std::sqrt(e1 * e2) - e1 - e2);
    if (std::abs(d) < 1e-6 * s1) {
        const double k2d2 = kappa * kappa * d * d;
        return kappa * (1.0 + k2d2 / 3.0 + k2d2 * k2d2 / 5.0 + k2d2 * k2d2 * k2d2 / 7.0);
    }
    return artanh(kappa * d) / d;
}

} // namespace

double phi_perp_x3_coefficient(double eps01, double eps02) {
    check_eps(eps01, eps02);
    const double s1 = std::sqrt(eps01), s2 = std::sqrt(eps02);
    return 1.0 - (eps01 + eps02 + s1 * s2 - eps01 * eps02) / (s1 + s2);
}

double phi_par_x3_coefficient(double eps01, double eps02) {
    check_eps(eps01, eps02);
    const double e1 = eps01, e2 = eps02;
    const double s1 = std::sqrt(e1), s2 = std::sqrt(e2);
    const double se = std::sqrt(e1 + e2);
    const double sp = std::sqrt(e1 * e2);
    const double d = s1 - s2;
    const double sum = e1 + e2;
    double bracket = -sum * sum * sum +
                     e1 * e2 * sp * (5.0 * e1 * e2 - 3.0 * e1 - 3.0 * e2 + 1.0) +
                     sp * d * d * (e1 * e2 * sp - sp - e1 - e2);
    bracket -= 3.0 * e1 * e1 * e2 * e2 * (e1 - 1.0) * (e2 - 1.0) / se *
               artanh_term_over_d(e1, e2);
    return 1.0 + bracket / ((s1 + s2) * sum * sum);
}

double c4_coefficient(double eps01, double eps02) {
    return (phi_par_x3_coefficient(eps01, eps02) +
            phi_perp_x3_coefficient(eps01, eps02)) /
           720.0;
}

double tau3_bracket(double eps01, double eps02) {
    check_eps(eps01, eps02);
    return (eps01 + eps02 + 2.0 * eps01 * eps02) * (eps01 - 1.0) * (eps02 - 1.0) /
           ((eps01 + 1.0) * (eps02 + 1.0) * (eps01 + eps02));
}

double free_energy_lowT(double E_a, double eps01, double eps02, double a, double T) {
    const double tau = tau_of(a, T);
    if (!(tau < 0.5)) throw std::domain_error("free_energy_lowT: requires tau < 0.5");
    const double t3 = tau * tau * tau;
    return E_a - hbar * c_light / (32.0 * pi * pi * a * a * a) *
                     (zeta3 * tau3_bracket(eps01, eps02) / (8.0 * pi * pi) * t3 -
                      c4_coefficient(eps01, eps02) * t3 * tau);
}

double pressure_lowT(double P0, double eps01, double eps02, double a, double T) {
    const double tau = tau_of(a, T);
    if (!(tau < 0.5)) throw std::domain_error("pressure_lowT: requires tau < 0.5");
    const double t4 = tau * tau * tau * tau;
    return P0 - hbar * c_light / (32.0 * pi * pi * a * a * a * a) *
                    c4_coefficient(eps01, eps02) * t4;
}

double entropy_lowT(double eps01, double eps02, double a, double T) {
    const double tau = tau_of(a, T);
    if (!(tau < 0.5)) throw std::domain_error("entropy_lowT: requires tau < 0.5");
    const double a2 = a * a;
    return 3.0 * k_boltzmann * zeta3 * tau3_bracket(eps01, eps02) /
               (64.0 * pi * pi * pi * a2) * tau * tau -
           k_boltzmann / (2.0 * pi * a2) * c4_coefficient(eps01, eps02) * tau * tau * tau;
}

double entropy_ideal_metal(double a, double T) {
    const double tau = tau_of(a, T);
    return 3.0 * k_boltzmann * zeta3 / (32.0 * pi * pi * pi * a * a) * tau * tau *
           (1.0 - 2.0 * pi * pi * tau / (135.0 * zeta3));
}

namespace {

double static_reflection_product(double eps01, double eps02) {
    check_eps(eps01, eps02);
    return (eps01 - 1.0) / (eps01 + 1.0) * (eps02 - 1.0) / (eps02 + 1.0);
}

void check_highT(double a, double T) {
    if (!(tau_of(a, T) >= 5.0))
        throw std::domain_error("highT forms: require tau >= 5 (l >= 1 terms are "
                                "only exponentially small there)");
}

} // namespace

double free_energy_highT(double eps01, double eps02, double a, double T) {
    check_highT(a, T);
    return -k_boltzmann * T / (16.0 * pi * a * a) *
           polylog(3, static_reflection_product(eps01, eps02));
}

double pressure_highT(double eps01, double eps02, double a, double T) {
    check_highT(a, T);
    return -k_boltzmann * T / (8.0 * pi * a * a * a) *
           polylog(3, static_reflection_product(eps01, eps02));
}

} // namespace lif
