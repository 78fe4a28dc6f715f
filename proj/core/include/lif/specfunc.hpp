#pragma once

// Special functions needed by the closed-form results: the exponential
// integral Ei for negative arguments, the polylogarithms Li2/Li3 on [-1,1],
// and the inverse hyperbolic tangent.

namespace lif {

// Ei(x) for x < 0, relative error <= 1e-12. Throws std::domain_error for x >= 0.
double exp_integral_ei(double x);

// Li_n(z) for n in {2,3}, z in [-1,1]. Throws std::domain_error otherwise.
double polylog(int n, double z);

// 0.5*ln((1+z)/(1-z)) for |z| < 1. Throws std::domain_error otherwise.
double artanh(double z);

} // namespace lif
