#pragma once

// Adaptive Gauss-Kronrod 7-15 quadrature. Header-only so the integrand
// lambdas inline into the hot loops of the Matsubara engine.

#include <cmath>
#include <stdexcept>

namespace lif {

namespace detail {

// Kronrod 15 abscissae (positive half) and weights; Gauss 7 weights.
inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gk15(const F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * gk_x[i]);
        fv[14 - i] = f(c + h * gk_x[i]);
    }
    fv[7] = f(c);
    double rk = 0.0, rg = 0.0;
    for (int i = 0; i < 8; ++i) rk += gk_wk[i] * (i == 7 ? fv[7] : fv[i] + fv[14 - i]);
    // Gauss-7 uses the odd Kronrod nodes (indices 1,3,5,7)
    rg = gk_wg[3] * fv[7];
    for (int i = 0; i < 3; ++i) rg += gk_wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    result = rk * h;
    err = std::abs((rk - rg) * h);
}

template <class F>
inline double adapt(const F& f, double a, double b, double tol, int depth) {
    double r, e;
    gk15(f, a, b, r, e);
    // second condition: error estimate at the round-off floor of the local
    // integral, further subdivision cannot improve it
    if (e <= tol || e <= 1e-15 * std::abs(r) + 1e-305 || depth <= 0) return r;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth - 1) + adapt(f, c, b, 0.5 * tol, depth - 1);
}

} // namespace detail

// Integrate f over [a,b] to absolute tolerance abs_tol.
template <class F>
inline double integrate(const F& f, double a, double b, double abs_tol, int max_depth = 48) {
    if (!(b > a)) return 0.0;
    return detail::adapt(f, a, b, abs_tol, max_depth);
}

// Integrate f over [a, +inf) where |f| decays at least like exp(-x) beyond
// the scale of its features. Panels double in width until three consecutive
// panel contributions fall below abs_tol.
template <class F>
inline double integrate_decaying(const F& f, double a, double abs_tol, int max_depth = 48) {
    double total = 0.0;
    double lo = a, w = 1.0;
    int quiet = 0;
    for (int p = 0; p < 64 && quiet < 3; ++p) {
        const double hi = lo + w;
        const double part = detail::adapt(f, lo, hi, abs_tol * 0.125, max_depth);
        total += part;
        quiet = (std::abs(part) < abs_tol) ? quiet + 1 : 0;
        lo = hi;
        if (w < 32.0) w *= 2.0;
    }
    return total;
}

} // namespace lif
