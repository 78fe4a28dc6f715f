#pragma once

// The dc-conductivity analysis: free energy and entropy with the
// conductivity-augmented permittivity, the nonzero T -> 0 entropy residual,
// and the first-order remainder R(a,T) with its exponential vanishing.

#include "lif/matsubara.hpp"

namespace lif {

struct DcStudyConfig {
    PlateConfig base; // Constant or Oscillators models with finite eps0
    ArrheniusConductivity conductivity1;
    ArrheniusConductivity conductivity2;

    DcStudyConfig(PlateConfig b, ArrheniusConductivity c1, ArrheniusConductivity c2);
    // the engine configuration at temperature T (dc-augmented models)
    PlateConfig at(double T) const;
};

// Engine free energy with dc-augmented models; the l = 0 term uses the
// r_par = 1, r_perp = 0 zero-frequency convention.
double free_energy_with_dc(const DcStudyConfig& study, double T, double tol = 1e-9);

// -dF~/dT by the same differentiation machinery as the plain entropy;
// sigma0 is re-evaluated at each temperature.
double entropy_with_dc(const DcStudyConfig& study, double T, double tol = 1e-11);

// (k_B / 16 pi a^2) [zeta(3) - Li3(r1 r2)] with r_k = (eps0k-1)/(eps0k+1);
// positive for finite eps0 (the Nernst-theorem violation residual).
double entropy_residual_at_zero(double eps01, double eps02, double a);

struct RemainderResult {
    double value;              // R = R1 + R2, direct summation, J/m^2
    double asymptotic;         // leading small-tau closed form, J/m^2
    double second_order_bound; // bound on the dropped O((beta/l)^2) tail
    bool underflow = false;    // beta underflowed; value is exactly 0
};

// First-order (in beta/l) remainder between the dc-augmented free energy and
// F + the zero-frequency bracket term.
RemainderResult remainder_R(const DcStudyConfig& study, double T, double tol = 1e-9);

} // namespace lif
