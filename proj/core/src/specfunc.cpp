#include "lif/specfunc.hpp"
#include "lif/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace lif {

namespace {

constexpr double euler_gamma = 0.57721566490153286061;

// Ei(x) = gamma + ln|x| + sum x^n/(n*n!), converges well for |x| < 6.
double ei_series(double x) {
    double sum = 0.0, term = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= x / n;
        const double add = term / n;
        sum += add;
        if (std::abs(add) < 1e-17 * (std::abs(sum) + 1e-300)) break;
    }
    return euler_gamma + std::log(std::abs(x)) + sum;
}

// E1(z) for z > 0 by the standard continued fraction (modified Lentz),
// Ei(-z) = -E1(z).
double e1_contfrac(double z) {
    const double tiny = 1e-300;
    double b = z + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-z);
}

double li_series(int n, double z) {
    double sum = 0.0, zk = 1.0;
    for (int k = 1; k < 2000; ++k) {
        zk *= z;
        const double add = (n == 2) ? zk / (static_cast<double>(k) * k)
                                    : zk / (static_cast<double>(k) * k * k);
        sum += add;
        if (std::abs(add) < 1e-16 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

double li_impl(int n, double z, int depth);

// z in (0.5, 1]: reflection identities push the argument into series range.
double li_upper(int n, double z, int depth) {
    if (z == 1.0) return (n == 2) ? pi * pi / 6.0 : zeta3;
    const double l1 = std::log(z), l2 = std::log1p(-z);
    if (n == 2) {
        // Li2(z) + Li2(1-z) = pi^2/6 - ln(z)ln(1-z)
        return pi * pi / 6.0 - l1 * l2 - li_series(2, 1.0 - z);
    }
    // Li3(z) + Li3(1-z) + Li3(1-1/z)
    //   = zeta(3) + ln^3(z)/6 + (pi^2/6)ln(z) - ln^2(z)ln(1-z)/2
    const double rhs = zeta3 + l1 * l1 * l1 / 6.0 + pi * pi / 6.0 * l1 - 0.5 * l1 * l1 * l2;
    return rhs - li_series(3, 1.0 - z) - li_impl(3, 1.0 - 1.0 / z, depth + 1);
}

double li_impl(int n, double z, int depth) {
    if (depth > 64) throw std::runtime_error("polylog: reflection recursion failed");
    if (std::abs(z) <= 0.5) return li_series(n, z);
    if (z > 0.0) return li_upper(n, z, depth);
    // negative argument: Li_n(z) + Li_n(-z) = 2^{1-n} Li_n(z^2)
    const double v = -z;
    return std::pow(2.0, 1 - n) * li_impl(n, v * v, depth + 1) - li_impl(n, v, depth + 1);
}

} // namespace

double exp_integral_ei(double x) {
    if (!(x < 0.0)) throw std::domain_error("exp_integral_ei: requires x < 0");
    if (x > -6.0) return ei_series(x);
    return -e1_contfrac(-x);
}

double polylog(int n, double z) {
    if (n != 2 && n != 3) throw std::domain_error("polylog: n must be 2 or 3");
    if (!(z >= -1.0 && z <= 1.0)) throw std::domain_error("polylog: z outside [-1,1]");
    return li_impl(n, z, 0);
}

double artanh(double z) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("artanh: requires |z| < 1");
    return 0.5 * std::log((1.0 + z) / (1.0 - z));
}

} // namespace lif
