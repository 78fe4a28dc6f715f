// Acceptance gate: thirteen numbered criteria, each printing exactly one
// pass/fail line with the measured figure and its bound. Criteria are
// checked at their stated tolerances; none are weakened to force a pass.
//
// Usage: acceptance [N ...]  (no arguments runs all criteria)

#include "lif/constants.hpp"
#include "lif/dilute.hpp"
#include "lif/lowtemp.hpp"
#include "lif/matsubara.hpp"
#include "lif/nernst.hpp"
#include "lif/optics.hpp"
#include "lif/quadrature.hpp"
#include "lif/specfunc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace lif;

namespace {

constexpr double a400 = 4e-7;

double tau_to_T(double a, double tau) { return tau / tau_of(a, 1.0); }

PlateConfig constant_pair(double e1, double e2, double a, double T) {
    return PlateConfig(DielectricModel::constant(e1), DielectricModel::constant(e2), a, T);
}

// Richardson central difference of f at x with initial step h
double derivative(const std::function<double(double)>& f, double x, double h) {
    const auto central = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

// least squares by Householder QR; A is row-major m x n, m >= n
std::vector<double> lstsq(std::vector<double> A, std::vector<double> b, int m, int n) {
    for (int k = 0; k < n; ++k) {
        double norm = 0.0;
        for (int i = k; i < m; ++i) norm += A[i * n + k] * A[i * n + k];
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        if (A[k * n + k] > 0.0) norm = -norm;
        std::vector<double> v(m - k);
        v[0] = A[k * n + k] - norm;
        for (int i = k + 1; i < m; ++i) v[i - k] = A[i * n + k];
        double vv = 0.0;
        for (double x : v) vv += x * x;
        if (vv == 0.0) continue;
        for (int j = k; j < n; ++j) {
            double dot = 0.0;
            for (int i = k; i < m; ++i) dot += v[i - k] * A[i * n + j];
            const double s = 2.0 * dot / vv;
            for (int i = k; i < m; ++i) A[i * n + j] -= s * v[i - k];
        }
        double dot = 0.0;
        for (int i = k; i < m; ++i) dot += v[i - k] * b[i];
        const double s = 2.0 * dot / vv;
        for (int i = k; i < m; ++i) b[i] -= s * v[i - k];
    }
    std::vector<double> x(n);
    for (int k = n - 1; k >= 0; --k) {
        double s = b[k];
        for (int j = k + 1; j < n; ++j) s -= A[k * n + j] * x[j];
        x[k] = s / A[k * n + k];
    }
    return x;
}

struct Criterion {
    bool pass = true;
    double worst = 0.0; // worst measured / bound over all sub-checks
    std::string note;
    void record(double measured, double bound) {
        const double margin = measured / bound;
        worst = std::max(worst, margin);
        pass = pass && (margin <= 1.0);
    }
};

// --- criterion 1: dilute small-tau expansion ------------------------------

Criterion criterion1() {
    Criterion c;
    for (double tau : {0.02, 0.05, 0.1}) {
        const double t4 = tau * tau * tau * tau;
        const double a1 = 46.0 / (15.0 * tau) + zeta3 / (2.0 * pi * pi) * tau * tau -
                          7.0 * tau * tau * tau / 360.0;
        const double a2 = 338.0 / (105.0 * tau) + zeta3 / (4.0 * pi * pi) * tau * tau +
                          tau * tau * tau / 360.0;
        c.record(std::abs(dilute_f1(tau) - a1), 5.0 * t4);
        c.record(std::abs(dilute_f2(tau) - a2), 5.0 * t4);
    }
    c.note = "dilute small-tau expansion, |f - series| / 5 tau^4";
    return c;
}

// --- criterion 2: dilute high-tau limit -----------------------------------

Criterion criterion2() {
    Criterion c;
    for (double tau = 10.0; tau <= 30.0; tau += 2.0) {
        const double bound = std::exp(-0.5 * tau);
        c.record(std::abs(dilute_f1(tau) - 1.0), bound);
        c.record(std::abs(dilute_f2(tau) - 1.0), bound);
    }
    c.note = "dilute high-tau limit, |f - 1| / exp(-tau/2)";
    return c;
}

// --- criterion 3: engine vs dilute closed form ----------------------------

Criterion criterion3() {
    Criterion c;
    const DilutePair pair(0.001, 0.002);
    for (double tau : {0.05, 0.2, 0.8, 2.0, 5.0, 10.0}) {
        const double T = tau_to_T(a400, tau);
        const double engine = free_energy(constant_pair(1.001, 1.002, a400, T), 1e-10);
        const double closed = free_energy_exact(pair, a400, T);
        c.record(std::abs(engine / closed - 1.0), 1e-6);
    }
    c.note = "engine vs dilute closed form, relative";
    return c;
}

// --- criterion 4: pressure equals -dF/da ----------------------------------

Criterion criterion4() {
    Criterion c;
    const std::vector<PlateConfig> configs = {
        constant_pair(11.66, 3.84, 4e-7, 300.0),
        constant_pair(3.84, 3.84, 4.5e-7, 300.0),
        constant_pair(11.66, 11.66, 2e-7, 100.0),
        PlateConfig(DielectricModel::oscillators({{2.5, 1e16}}),
                    DielectricModel::oscillators({{1.0, 3e15}}), 4e-7, 300.0),
        constant_pair(1.5, 2.0, 1e-6, 200.0)};
    for (const auto& cfg : configs) {
        const auto f_at = [&](double a) {
            return free_energy(PlateConfig(cfg.model1, cfg.model2, a, cfg.T), 1e-12);
        };
        const double d = -derivative(f_at, cfg.a, cfg.a * 1e-3);
        c.record(std::abs(pressure(cfg, 1e-12) / d - 1.0), 1e-4);
    }
    c.note = "thermodynamic consistency P = -dF/da, relative";
    return c;
}

// --- criterion 5: low-temperature asymptote agreement ---------------------

Criterion criterion5() {
    Criterion c;
    const double e1 = 11.66, e2 = 3.84, a = a400;
    const double E = energy_T0(constant_pair(e1, e2, a, 0.0), 1e-12);
    const double pref_f = hbar * c_light / (32.0 * pi * pi * a * a * a);
    const double B = tau3_bracket(e1, e2);
    const double C4 = c4_coefficient(e1, e2);
    for (double T : {10.0, 20.0, 30.0, 40.0, 50.0, 60.0}) {
        const double tau = tau_of(a, T);
        const double df = free_energy(constant_pair(e1, e2, a, T), 1e-12) - E;
        const double asym = -pref_f * (zeta3 * B / (8.0 * pi * pi) * tau * tau * tau -
                                       C4 * tau * tau * tau * tau);
        c.record(std::abs(df / asym - 1.0), 0.02);
    }
    // constant permittivities carry no frequency scale, so E scales exactly
    // as a^-3 and the zero-temperature pressure is 3E/a
    const double P0 = 3.0 * E / a;
    for (double T : {10.0, 20.0, 30.0, 40.0, 50.0}) {
        const double tau = tau_of(a, T);
        const double dp = pressure(constant_pair(e1, e2, a, T), 1e-12) - P0;
        const double asym = -pref_f / a * C4 * tau * tau * tau * tau;
        c.record(std::abs(dp / asym - 1.0), 0.02);
    }
    c.note = "low-T asymptote vs engine thermal corrections, relative";
    return c;
}

// --- criterion 6: similar-plate reduction and seam ------------------------

// c4 assembled with the 4-term odd series of artanh in place of the closed
// artanh; the continuation of the near-degenerate branch past its threshold
double c4_series_branch(double e1, double e2) {
    const double s1 = std::sqrt(e1), s2 = std::sqrt(e2);
    const double se = std::sqrt(e1 + e2), sp = std::sqrt(e1 * e2);
    const double d = s1 - s2, sum = e1 + e2;
    const double kappa = se / (sp - sum);
    const double k2d2 = kappa * kappa * d * d;
    const double at_over_d =
        kappa * (1.0 + k2d2 / 3.0 + k2d2 * k2d2 / 5.0 + k2d2 * k2d2 * k2d2 / 7.0);
    double bracket = -sum * sum * sum +
                     e1 * e2 * sp * (5.0 * e1 * e2 - 3.0 * e1 - 3.0 * e2 + 1.0) +
                     sp * d * d * (e1 * e2 * sp - sp - e1 - e2);
    bracket -= 3.0 * e1 * e1 * e2 * e2 * (e1 - 1.0) * (e2 - 1.0) / se * at_over_d;
    const double phi_par = 1.0 + bracket / ((s1 + s2) * sum * sum);
    const double phi_perp = 1.0 - (e1 + e2 + s1 * s2 - e1 * e2) / (s1 + s2);
    return (phi_par + phi_perp) / 720.0;
}

Criterion criterion6() {
    Criterion c;
    for (double e0 : {2.0, 3.84, 11.66}) {
        const double s = std::sqrt(e0);
        const double closed = (s - 1.0) * (e0 * e0 + e0 * s - 2.0) / 720.0;
        c.record(std::abs(c4_coefficient(e0, e0) / closed - 1.0), 1e-10);
    }
    // general branch vs the series continuation just outside its threshold
    for (double e0 : {2.0, 3.84, 11.66}) {
        const double s = std::sqrt(e0);
        const double e2 = (s - 1e-5) * (s - 1e-5);
        c.record(std::abs(c4_coefficient(e0, e2) / c4_series_branch(e0, e2) - 1.0), 1e-8);
    }
    c.note = "similar-plate C4 closed form and seam continuity";
    return c;
}

// --- criterion 7: dilute reduction of C4 ----------------------------------

Criterion criterion7() {
    Criterion c;
    // c4(1+x, 1+y) = A x y + B x y (x + y) + higher order; the dilute
    // expansions require A = 7/2880 and B = 1/5760 (same coefficients enter
    // the free-energy and pressure tau^4 terms through one prefactor map)
    const double etas[3] = {0.001, 0.002, 0.004};
    double g[3];
    for (int i = 0; i < 3; ++i)
        g[i] = c4_coefficient(1.0 + etas[i], 1.0 + etas[i]) / (etas[i] * etas[i]);
    // quadratic fit g(eta) = A + 2B eta + C eta^2 through the three points
    const double x0 = etas[0], x1 = etas[1], x2 = etas[2];
    const double d0 = (g[1] - g[0]) / (x1 - x0);
    const double d1 = (g[2] - g[1]) / (x2 - x1);
    const double C = (d1 - d0) / (x2 - x0);
    const double twoB = d0 - C * (x0 + x1);
    const double A = g[0] - twoB * x0 - C * x0 * x0;
    c.record(std::abs(A / (7.0 / 2880.0) - 1.0), 1e-3);
    c.record(std::abs(0.5 * twoB / (1.0 / 5760.0) - 1.0), 1e-3);
    // asymmetric cross-check
    const double pred = A * 0.002 * 0.004 + 0.5 * twoB * 0.002 * 0.004 * 0.006;
    c.record(std::abs(c4_coefficient(1.002, 1.004) / pred - 1.0), 1e-3);
    c.note = "dilute eta-expansion of C4, relative coefficient error";
    return c;
}

// --- criterion 8: Nernst theorem scaling ----------------------------------

Criterion criterion8() {
    Criterion c;
    const double a = a400;
    const double taus[5] = {0.005, 0.01, 0.02, 0.035, 0.05};
    const double pairs[2][2] = {{11.66, 3.84}, {3.84, 3.84}};
    for (const auto& p : pairs) {
        double S[5];
        for (int i = 0; i < 5; ++i)
            S[i] = entropy(constant_pair(p[0], p[1], a, tau_to_T(a, taus[i])), 1e-11);
        // power-law exponent from a log-log straight-line fit
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double x = std::log(taus[i]), y = std::log(std::abs(S[i]));
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        const double power = (5.0 * sxy - sx * sy) / (5.0 * sxx - sx * sx);
        c.record(std::abs(power - 2.0), 0.1);
        // tau^2 coefficient from a two-term fit S = c2 tau^2 + c3 tau^3
        std::vector<double> M(10), rhs(5);
        for (int i = 0; i < 5; ++i) {
            M[i * 2] = taus[i] * taus[i];
            M[i * 2 + 1] = taus[i] * taus[i] * taus[i];
            rhs[i] = S[i];
        }
        const auto coef = lstsq(M, rhs, 5, 2);
        const double c2_closed = 3.0 * k_boltzmann * zeta3 * tau3_bracket(p[0], p[1]) /
                                 (64.0 * pi * pi * pi * a * a);
        c.record(std::abs(coef[0] / c2_closed - 1.0), 0.05);
    }
    c.note = "entropy ~ tau^2 with the predicted coefficient";
    return c;
}

// --- criterion 9: high-temperature polylog limits -------------------------

Criterion criterion9() {
    Criterion c;
    for (double tau : {8.0, 12.0}) {
        const double T = tau_to_T(a400, tau);
        const auto cfg = constant_pair(11.66, 3.84, a400, T);
        c.record(std::abs(free_energy(cfg, 1e-10) /
                              free_energy_highT(11.66, 3.84, a400, T) -
                          1.0),
                 1e-3);
        c.record(std::abs(pressure(cfg, 1e-10) /
                              pressure_highT(11.66, 3.84, a400, T) -
                          1.0),
                 1e-3);
    }
    c.note = "engine vs high-T polylog closed forms, relative";
    return c;
}

// --- criterion 10: Phi coefficient quadrature oracle ----------------------

// quadrature of the Phi integrands at fixed x with static permittivities
double phi_parallel_quad(double e1, double e2, double x) {
    const double R = (e1 - 1.0) / (e1 + 1.0) * (e2 - 1.0) / (e2 + 1.0);
    // difference formulation: Phi_par(x) - 2 Li3(R) evaluated without the
    // catastrophic cancellation of subtracting two O(1) quadratures
    const auto tail = [&](double u) {
        const double y = x + u;
        const double p = reflection_parallel(e1, x, y) * reflection_parallel(e2, x, y);
        const double ey = std::exp(y);
        return y * y * (p / (ey - p) - R / (ey - R));
    };
    const auto head = [&](double y) {
        return y * y * R / (std::exp(y) - R);
    };
    return integrate_decaying(tail, 0.0, 1e-13) - integrate(head, 0.0, x, 1e-13);
}

double phi_perp_quad(double e1, double e2, double x) {
    const auto f = [&](double u) {
        const double y = x + u;
        const double t = reflection_perp(e1, x, y) * reflection_perp(e2, x, y);
        return y * y * t / (std::exp(y) - t);
    };
    return integrate_decaying(f, 0.0, 1e-13);
}

// fit h(x) = c0 + sum_k (a_k x^k ln x + b_k x^k) and return c0
double fit_x3_coefficient(const std::vector<double>& xs, const std::vector<double>& hs) {
    const int m = static_cast<int>(xs.size());
    const int n = 17; // 1 + 8 log columns + 8 power columns
    std::vector<double> A(m * n), scale(n, 0.0);
    for (int i = 0; i < m; ++i) {
        const double x = xs[i], lx = std::log(x);
        A[i * n] = 1.0;
        double xk = 1.0;
        for (int k = 1; k <= 8; ++k) {
            xk *= x;
            A[i * n + 2 * k - 1] = xk * lx;
            A[i * n + 2 * k] = xk;
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) scale[j] = std::max(scale[j], std::abs(A[i * n + j]));
        for (int i = 0; i < m; ++i) A[i * n + j] /= scale[j];
    }
    const auto coef = lstsq(A, hs, m, n);
    return coef[0] / scale[0];
}

Criterion criterion10() {
    Criterion c;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(1.5, 20.0);
    std::vector<double> xs(36);
    for (int i = 0; i < 36; ++i)
        xs[i] = 0.02 * std::pow(0.1 / 0.02, static_cast<double>(i) / 35);
    for (int trial = 0; trial < 5; ++trial) {
        const double e1 = dist(rng), e2 = dist(rng);
        const double R = (e1 - 1.0) / (e1 + 1.0) * (e2 - 1.0) / (e2 + 1.0);
        const double K = (e1 + e2 + 2.0 * e1 * e2) / ((e1 + 1.0) * (e2 + 1.0));
        const double a2 = -K * R / (1.0 - R); // x^2 coefficient of Phi_par - 2 Li3(R)
        std::vector<double> h_par(36), h_perp(36);
        for (int i = 0; i < 36; ++i) {
            const double x = xs[i];
            h_par[i] = (phi_parallel_quad(e1, e2, x) - a2 * x * x) / (x * x * x);
            h_perp[i] = phi_perp_quad(e1, e2, x) / (x * x * x);
        }
        const double cpar_fit = 6.0 * fit_x3_coefficient(xs, h_par);
        const double cperp_fit = 6.0 * fit_x3_coefficient(xs, h_perp);
        c.record(std::abs(cpar_fit / phi_par_x3_coefficient(e1, e2) - 1.0), 1e-3);
        c.record(std::abs(cperp_fit / phi_perp_x3_coefficient(e1, e2) - 1.0), 1e-3);
        // assembled C4 through the 1/240 thermal integral
        const double assembled =
            (phi_par_x3_coefficient(e1, e2) + phi_perp_x3_coefficient(e1, e2)) / 720.0;
        c.record(std::abs(assembled / c4_coefficient(e1, e2) - 1.0), 1e-10);
    }
    c.note = "Phi x^3 coefficients by quadrature fit, relative";
    return c;
}

// --- criterion 11: dc-conductivity Nernst violation -----------------------

Criterion criterion11() {
    Criterion c;
    const double a = a400, b = 300.0;
    const PlateConfig base(DielectricModel::constant(11.66),
                           DielectricModel::constant(3.84), a, 300.0);
    const DcStudyConfig study(base, {53.3, b}, {53.3, b});

    // (a) T -> 0 extrapolation of the dc entropy hits the closed residual
    const double s2 = entropy_with_dc(study, 2.0, 1e-11);
    const double s4 = entropy_with_dc(study, 4.0, 1e-11);
    const double s0 = (4.0 * s2 - s4) / 3.0; // quadratic-in-T extrapolation
    const double resid = entropy_residual_at_zero(11.66, 3.84, a);
    c.record(std::abs(s0 / resid - 1.0), 0.01);

    // (b) R e^{b/T} grows at most logarithmically over [b/20, b/5]
    std::vector<double> Ts, Ds;
    double ratio_lo = 1e300, ratio_hi = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double T = b / 20.0 + (b / 5.0 - b / 20.0) * i / 7.0;
        const auto r = remainder_R(study, T, 1e-8);
        const double m = r.value * std::exp(b / T) / std::log(tau_of(a, T));
        ratio_lo = std::min(ratio_lo, m);
        ratio_hi = std::max(ratio_hi, m);
        // (c) decay-rate data: D = |dR/dT| by central differences
        const double h = T * 0.02;
        const double d = std::abs((remainder_R(study, T + h, 1e-8).value -
                                   remainder_R(study, T - h, 1e-8).value) /
                                  (2.0 * h));
        Ts.push_back(T);
        Ds.push_back(d);
    }
    c.record(ratio_hi / ratio_lo - 1.0, 0.5); // bounded modulo the log factor

    // (c) fitted decay rate of the remainder equals b within 10%; the fit
    // removes the known power-law and log prefactors before taking slopes
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const int n = static_cast<int>(Ts.size());
    for (int i = 0; i < n; ++i) {
        const double x = 1.0 / Ts[i];
        const double y = std::log(Ds[i] * Ts[i] * Ts[i] /
                                  std::abs(std::log(tau_of(a, Ts[i]))));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    c.record(std::abs(-slope / b - 1.0), 0.1);
    c.note = "dc-conductivity entropy residual and remainder decay";
    return c;
}

// --- criterion 12: dispersion-relation round trip -------------------------

OpticalTable lorentz_table(int per_decade) {
    const double A = 10.0 * 1e30, w0 = 1e15, g = 1e14;
    std::vector<OpticalSample> s;
    const int n = per_decade * 6 + 1;
    for (int i = 0; i < n; ++i) {
        const double w = 1e12 * std::pow(1e6, static_cast<double>(i) / (n - 1));
        const double d = w0 * w0 - w * w;
        s.push_back({w, A * g * w / (d * d + g * g * w * w)});
    }
    return OpticalTable(std::move(s));
}

Criterion criterion12() {
    Criterion c;
    const double A = 10.0 * 1e30, w0 = 1e15, g = 1e14;
    const auto base = lorentz_table(960);
    const auto dense = lorentz_table(1920);
    for (double xi = 1e13; xi < 1.1e17; xi *= std::sqrt(10.0)) {
        const double exact = 1.0 + A / (w0 * w0 + g * xi + xi * xi);
        const double v = kk_transform(base, xi);
        c.record(std::abs(v / exact - 1.0), 0.01);
        c.record(std::abs(kk_transform(dense, xi) / v - 1.0), 1e-6);
    }
    c.note = "synthetic oscillator round trip and grid convergence";
    return c;
}

// --- criterion 13: monotone thermal corrections ---------------------------

Criterion criterion13() {
    Criterion c;
    const double pairs[3][3] = {{11.66, 3.84, 4e-7}, {3.84, 3.84, 4.5e-7},
                                {11.66, 11.66, 4e-7}};
    for (const auto& p : pairs) {
        const double a = p[2];
        const double E = energy_T0(constant_pair(p[0], p[1], a, 0.0), 1e-11);
        const double P0 = 3.0 * E / a; // exact for dispersion-free models
        double prev_f = 0.0, prev_p = 0.0;
        for (double T : {10.0, 50.0, 100.0, 150.0, 200.0, 250.0, 300.0}) {
            const auto cfg = constant_pair(p[0], p[1], a, T);
            const double df = std::abs(free_energy(cfg, 1e-11) - E);
            const double dp = std::abs(pressure(cfg, 1e-11) - P0);
            c.record(df > prev_f ? 0.0 : 1.0, 0.5);
            c.record(dp > prev_p ? 0.0 : 1.0, 0.5);
            prev_f = df;
            prev_p = dp;
        }
    }
    c.note = "|dF(T)| and |dP(T)| strictly increasing on the T grid";
    return c;
}

using CriterionFn = Criterion (*)();

const CriterionFn criteria[13] = {
    criterion1, criterion2, criterion3,  criterion4,  criterion5,  criterion6,
    criterion7, criterion8, criterion9,  criterion10, criterion11, criterion12,
    criterion13};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > 13) {
            std::fprintf(stderr, "usage: acceptance [1..13 ...]\n");
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty())
        for (int n = 1; n <= 13; ++n) selected.push_back(n);

    bool all_pass = true;
    for (int n : selected) {
        const Criterion c = criteria[n - 1]();
        all_pass = all_pass && c.pass;
        std::printf("[%s] criterion %2d: %s (worst margin %.3e of allowed)\n",
                    c.pass ? "PASS" : "FAIL", n, c.note.c_str(), c.worst);
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
