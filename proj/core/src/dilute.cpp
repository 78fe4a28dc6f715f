#include "lif/dilute.hpp"
#include "lif/constants.hpp"
#include "lif/specfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace lif {

DilutePair::DilutePair(double e1, double e2) : eta1(e1), eta2(e2) {
    if (!(eta1 > 0.0) || !(eta2 > 0.0) || eta1 > 0.1 || eta2 > 0.1)
        throw std::invalid_argument("DilutePair: eta must be in (0, 0.1]");
}

double dilute_I1(double zeta) {
    if (zeta < 0.0) throw std::domain_error("dilute_I1: zeta must be >= 0");
    if (zeta == 0.0) return 2.0;
    const double z = zeta;
    return std::exp(-z) * (2.0 + 2.0 * z + 0.5 * z * z - 0.5 * z * z * z) +
           z * z * (2.0 - 0.5 * z * z) * exp_integral_ei(-z);
}

double dilute_I2(double zeta) {
    if (zeta < 0.0) throw std::domain_error("dilute_I2: zeta must be >= 0");
    if (zeta == 0.0) return 2.0;
    const double z = zeta, z2 = z * z;
    return std::exp(-z) *
               (2.0 + 2.0 * z - 0.25 * z2 + 5.0 / 12.0 * z2 * z + z2 * z2 / 24.0 -
                z2 * z2 * z / 24.0) +
           z2 * (1.0 + 0.5 * z2 - z2 * z2 / 24.0) * exp_integral_ei(-z);
}

namespace {

void check_tau(double tau) {
    if (!(tau > 0.0)) throw std::domain_error("dilute: tau must be > 0");
}

// Ei-weighted tails of the l-sums, truncated when a term falls below
// 1e-16 of the partial sum; Ei(-zeta) ~ e^{-zeta}/zeta keeps the count O(1/tau)
template <class Term>
double ei_sum(double tau, const Term& term) {
    double sum = 0.0;
    for (int l = 1;; ++l) {
        const double z = tau * l;
        const double t = term(z);
        sum += t;
        if (z > 3.0 && std::abs(t) < 1e-16 * std::abs(sum)) break;
        if (z > 750.0) break;
    }
    return sum;
}

double f1_sum(double tau) {
    return ei_sum(tau, [](double z) {
        return z * z * (2.0 - 0.5 * z * z) * exp_integral_ei(-z);
    });
}

double f2_sum(double tau) {
    return ei_sum(tau, [](double z) {
        const double z2 = z * z;
        return z2 * (1.0 + 0.5 * z2 - z2 * z2 / 24.0) * exp_integral_ei(-z);
    });
}

} // namespace

double dilute_f1(double tau) {
    check_tau(tau);
    if (tau < 1e-3) // asymptotic path; overlap with the exact path validated in tests
        return 46.0 / (15.0 * tau) + zeta3 / (2.0 * pi * pi) * tau * tau -
               7.0 * tau * tau * tau / 360.0;
    if (tau > 500.0) return 1.0;
    const double et = std::exp(tau);
    const double d = et - 1.0;
    const double closed = 1.0 + 2.0 * ((1.0 + tau) * et - 1.0) / (d * d) +
                          tau * tau * et *
                              ((1.0 - tau) * et * et - 4.0 * tau * et - tau - 1.0) /
                              (2.0 * d * d * d * d);
    return closed + f1_sum(tau);
}

double dilute_f2(double tau) {
    check_tau(tau);
    if (tau < 1e-3)
        return 338.0 / (105.0 * tau) + zeta3 / (4.0 * pi * pi) * tau * tau +
               tau * tau * tau / 360.0;
    if (tau > 500.0) return 1.0;
    const double et = std::exp(tau);
    const double d = et - 1.0;
    const double d4 = d * d * d * d;
    const double t4 = tau * tau * tau * tau;
    const double closed =
        1.0 + 2.0 * ((1.0 + tau) * et - 1.0) / (d * d) +
        tau * tau * et * ((5.0 * tau - 3.0) * et * et + 20.0 * tau * et + 5.0 * tau + 3.0) /
            (12.0 * d4) -
        t4 * et *
            ((tau - 1.0) * et * et * et * et + 2.0 * (13.0 * tau - 5.0) * et * et * et +
             66.0 * tau * et * et + 2.0 * (13.0 * tau + 5.0) * et + tau + 1.0) /
            (24.0 * d4 * d * d);
    return closed + f2_sum(tau);
}

double dilute_p1(double tau) {
    check_tau(tau);
    if (tau < 1e-3) return 46.0 / (5.0 * tau) + 7.0 * tau * tau * tau / 360.0;
    if (tau > 500.0) return 2.0;
    const double et = std::exp(tau);
    const double d = et - 1.0;
    const double closed = 2.0 + 4.0 * ((1.0 + tau) * et - 1.0) / (d * d) +
                          tau * tau * tau * et * (et * et + 4.0 * et + 1.0) /
                              (d * d * d * d);
    const double t4 = tau * tau * tau * tau;
    return closed + t4 * ei_sum(tau, [tau](double z) {
               const double l = z / tau;
               return l * l * l * l * exp_integral_ei(-z);
           });
}

double dilute_p2(double tau) {
    check_tau(tau);
    if (tau < 1e-3) return 338.0 / (35.0 * tau) - tau * tau * tau / 360.0;
    if (tau > 500.0) return 2.0;
    const double et = std::exp(tau);
    const double d = et - 1.0;
    const double d4 = d * d * d * d;
    const double t4 = tau * tau * tau * tau;
    const double closed =
        2.0 + 4.0 * ((1.0 + tau) * et - 1.0) / (d * d) -
        tau * tau * et * ((2.0 * tau - 3.0) * et * et + 8.0 * tau * et + 2.0 * tau + 3.0) /
            (3.0 * d4) +
        t4 * et *
            ((tau - 1.0) * et * et * et * et + 2.0 * (13.0 * tau - 5.0) * et * et * et +
             66.0 * tau * et * et + 2.0 * (13.0 * tau + 5.0) * et + tau + 1.0) /
            (6.0 * d4 * d * d);
    return closed - t4 * ei_sum(tau, [tau](double z) {
               const double l = z / tau;
               const double l4 = l * l * l * l;
               return l4 * (1.0 - z * z / 6.0) * exp_integral_ei(-z);
           });
}

double free_energy_exact(const DilutePair& pair, double a, double T) {
    const double tau = tau_of(a, T);
    const double pref = hbar * c_light * tau * pair.eta1 * pair.eta2 /
                        (256.0 * pi * pi * a * a * a);
    return -pref *
           (dilute_f1(tau) - 0.5 * (pair.eta1 + pair.eta2) * dilute_f2(tau));
}

double pressure_exact(const DilutePair& pair, double a, double T) {
    const double tau = tau_of(a, T);
    const double pref = hbar * c_light * tau * pair.eta1 * pair.eta2 /
                        (256.0 * pi * pi * a * a * a * a);
    return -pref *
           (dilute_p1(tau) - 0.5 * (pair.eta1 + pair.eta2) * dilute_p2(tau));
}

DiluteAsymptotics asymptotics_lowT(const DilutePair& pair, double a, double T) {
    const double tau = tau_of(a, T);
    if (!(tau < 0.5)) throw std::domain_error("asymptotics_lowT: requires tau < 0.5");
    const double es = 0.5 * (pair.eta1 + pair.eta2);
    const double t3 = tau * tau * tau, t4 = t3 * tau;
    DiluteAsymptotics out;
    const double pref_f =
        hbar * c_light * pair.eta1 * pair.eta2 / (256.0 * pi * pi * a * a * a);
    out.free_energy =
        -pref_f * (46.0 / 15.0 + zeta3 / (2.0 * pi * pi) * t3 - 7.0 * t4 / 360.0 -
                   es * (338.0 / 105.0 + zeta3 / (4.0 * pi * pi) * t3 + t4 / 360.0));
    const double pref_p = pref_f / a;
    out.pressure = -pref_p * (46.0 / 5.0 + 7.0 * t4 / 360.0 -
                              es * (338.0 / 35.0 - t4 / 360.0));
    out.entropy = 3.0 * k_boltzmann * zeta3 * pair.eta1 * pair.eta2 * tau * tau /
                  (128.0 * pi * pi * pi * a * a) *
                  (1.0 - 0.5 * es - (1.0 + es / 7.0) * 7.0 * pi * pi * tau /
                                        (135.0 * zeta3));
    return out;
}

} // namespace lif
