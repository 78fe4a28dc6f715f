#pragma once

// Low-temperature asymptotics for arbitrary finite static permittivities:
// the tau^4 coefficient C4, the closed-form free energy / pressure / entropy
// expansions, the ideal-metal entropy law, and the high-temperature
// polylog limits.

namespace lif {

// the universal coefficient of the tau^4 thermal correction; handles the
// equal-permittivity 0/0 seam by a Taylor branch
double c4_coefficient(double eps01, double eps02);

// x^3/6 coefficients of the two polarization contributions to the
// thermal-correction kernel; c4 = (phi_par + phi_perp)/720
double phi_perp_x3_coefficient(double eps01, double eps02);
double phi_par_x3_coefficient(double eps01, double eps02);

// the tau^3 bracket of the free-energy expansion:
// B = (e1+e2+2 e1 e2)(e1-1)(e2-1) / ((e1+1)(e2+1)(e1+e2))
double tau3_bracket(double eps01, double eps02);

// F = E(a) - (hbar c / 32 pi^2 a^3) [zeta(3) B /(8 pi^2) tau^3 - C4 tau^4];
// E(a) supplied externally (matsubara::energy_T0). Requires tau < 0.5.
double free_energy_lowT(double E_a, double eps01, double eps02, double a, double T);

// P = P0(a) - (hbar c / 32 pi^2 a^4) C4 tau^4
double pressure_lowT(double P0, double eps01, double eps02, double a, double T);

// entropy expansion (tau^2 leading term with the -C4 tau^3 correction)
double entropy_lowT(double eps01, double eps02, double a, double T);

// ideal-metal low-temperature entropy law
double entropy_ideal_metal(double a, double T);

// high-temperature (tau >> 1) polylog closed forms; guarded at tau >= 5
double free_energy_highT(double eps01, double eps02, double a, double T);
double pressure_highT(double eps01, double eps02, double a, double T);

} // namespace lif
