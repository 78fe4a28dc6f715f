#include "lif/nernst.hpp"
#include "lif/constants.hpp"
#include "lif/quadrature.hpp"
#include "lif/specfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace lif {

DcStudyConfig::DcStudyConfig(PlateConfig b, ArrheniusConductivity c1,
                             ArrheniusConductivity c2)
    : base(std::move(b)), conductivity1(c1), conductivity2(c2) {
    if (base.model1.is_dc_augmented() || base.model2.is_dc_augmented())
        throw std::invalid_argument("DcStudyConfig: base models must not already be "
                                    "dc-augmented");
}

PlateConfig DcStudyConfig::at(double T) const {
    return PlateConfig(DielectricModel::dc_augmented(base.model1, conductivity1.at(T)),
                       DielectricModel::dc_augmented(base.model2, conductivity2.at(T)),
                       base.a, T);
}

double free_energy_with_dc(const DcStudyConfig& study, double T, double tol) {
    return free_energy(study.at(T), tol);
}

double entropy_with_dc(const DcStudyConfig& study, double T, double tol) {
    if (!(T > 0.0)) throw std::invalid_argument("entropy_with_dc: requires T > 0");
    const double h = std::max(T * 1e-3, 1e-3);
    const double f_tol = std::min(tol * 1e-2, 1e-13);
    const auto central = [&](double step) {
        return -(free_energy_with_dc(study, T + step, f_tol) -
                 free_energy_with_dc(study, T - step, f_tol)) /
               (2.0 * step);
    };
    const double d1 = central(h);
    const double d2 = central(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

double entropy_residual_at_zero(double eps01, double eps02, double a) {
    if (!(eps01 >= 1.0) || !(eps02 >= 1.0))
        throw std::domain_error("entropy_residual_at_zero: eps0 must be >= 1");
    const double r = (eps01 - 1.0) / (eps01 + 1.0) * (eps02 - 1.0) / (eps02 + 1.0);
    return k_boltzmann / (16.0 * pi * a * a) * (zeta3 - polylog(3, r));
}

namespace {

// the y-integral of the first-order remainder kernel for "perturbed plate" p
// against "spectator plate" s at fixed zeta
double remainder_integral(double eps_p, double eps_s, double zeta, double abs_tol) {
    const double z2p = zeta * zeta * (eps_p - 1.0);
    const double z2s = zeta * zeta * (eps_s - 1.0);
    const auto f = [=](double u) {
        const double y = zeta + u;
        const double y2 = y * y;
        const double sp = std::sqrt(y2 + z2p), ss = std::sqrt(y2 + z2s);
        const double rp_p = (eps_p * y - sp) / (eps_p * y + sp);
        const double rp_s = (eps_s * y - ss) / (eps_s * y + ss);
        const double rt_p = (sp - y) / (sp + y);
        const double rt_s = (ss - y) / (ss + y);
        const double emy = std::exp(-y);
        const double dp = eps_p * y + sp;
        const double par = ((2.0 - eps_p) * zeta * zeta - 2.0 * y2) / (dp * dp) *
                           rp_s / (1.0 - rp_p * rp_s * emy);
        const double perp = zeta * zeta / (sp + y) * rt_s / (1.0 - rt_p * rt_s * emy);
        return y2 * emy / sp * (par - perp);
    };
    return integrate_decaying(f, 0.0, abs_tol);
}

// one plate's contribution, Matsubara sum over l >= 1
double remainder_one_sided(const DielectricModel& perturbed, const DielectricModel& other,
                           double beta, double a, double T, double tol) {
    if (beta == 0.0) return 0.0;
    const double tau = tau_of(a, T);
    const double xi_c = xi_characteristic(a);
    double sum = 0.0;
    // tolerance scale of the bare integrals (the beta/l factor is applied
    // afterwards and must not tighten the quadrature); a priori e^-zeta bound
    // for the first term
    double iscale = std::exp(-tau);
    int quiet = 0;
    for (int l = 1; quiet < 3; ++l) {
        if (l > 10000000)
            throw std::runtime_error("remainder_R: truncation cap hit");
        const double zeta = tau * l;
        const double ep = perturbed.eval(zeta * xi_c);
        const double es = other.eval(zeta * xi_c);
        const double abs_tol = tol * std::max(iscale, 1e-280) * 1e-3;
        const double integral = remainder_integral(ep, es, zeta, abs_tol);
        const double t = beta / l * integral;
        sum += t;
        iscale = std::max(iscale, std::abs(integral));
        quiet = (std::abs(t) <= tol * std::abs(sum) || std::abs(t) < 1e-300) ? quiet + 1 : 0;
    }
    return k_boltzmann * T / (8.0 * pi * a * a) * sum;
}

} // namespace

RemainderResult remainder_R(const DcStudyConfig& study, double T, double tol) {
    if (!(T > 0.0)) throw std::invalid_argument("remainder_R: requires T > 0");
    RemainderResult out;
    const double s1 = study.conductivity1.at(T);
    const double s2 = study.conductivity2.at(T);
    if (s1 == 0.0 && s2 == 0.0) {
        out.underflow = (study.conductivity1.sigma_ref > 0.0 ||
                         study.conductivity2.sigma_ref > 0.0);
        return out;
    }
    const double beta1 = conductivity_beta(s1, T);
    const double beta2 = conductivity_beta(s2, T);
    const double a = study.base.a;
    out.value = remainder_one_sided(study.base.model1, study.base.model2, beta1, a, T, tol) +
                remainder_one_sided(study.base.model2, study.base.model1, beta2, a, T, tol);
    const double e01 = study.base.model1.static_permittivity();
    const double e02 = study.base.model2.static_permittivity();
    const double r0 = (e01 - 1.0) / (e01 + 1.0) * (e02 - 1.0) / (e02 + 1.0);
    const double li2 = polylog(2, r0);
    const double lntau = std::log(tau_of(a, T));
    out.asymptotic = k_boltzmann * li2 * T * lntau / (4.0 * pi * a * a) *
                     (beta1 / (e01 * e01 - 1.0) + beta2 / (e02 * e02 - 1.0));
    out.second_order_bound = std::abs(out.value) * std::max(beta1, beta2);
    return out;
}

} // namespace lif
