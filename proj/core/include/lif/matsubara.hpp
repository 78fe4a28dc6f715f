#pragma once

// The Lifshitz engine: free energy, pressure, and entropy per unit area of
// two thick plates from direct Matsubara summation, plus the
// zero-temperature energy integral and derived quantities.

#include "lif/models.hpp"

namespace lif {

struct PlateConfig {
    DielectricModel model1;
    DielectricModel model2;
    double a; // separation, m (>= 2e-9)
    double T; // temperature, K (>= 0)

    PlateConfig(DielectricModel m1, DielectricModel m2, double a_, double T_);
    double tau() const;
};

struct ThermalResult {
    double free_energy_per_area = 0.0; // J/m^2
    double pressure = 0.0;             // Pa
    double entropy_per_area = 0.0;     // J/(m^2 K)
    int l_max_used = 0;
    double quadrature_error_estimate = 0.0; // relative
};

// Fresnel reflection coefficients at imaginary frequency in dimensionless
// variables. eps_l = +inf is the distinguished zero-frequency dc marker and
// gives r_par = 1, r_perp = 0.
double reflection_parallel(double eps_l, double zeta_l, double y);
double reflection_perp(double eps_l, double zeta_l, double y);

// Free energy per unit area, Matsubara sum with half-weighted l = 0 term
// (computed in closed form). Relative tolerance tol.
double free_energy(const PlateConfig& config, double tol = 1e-9);

// Pressure (negative = attraction).
double pressure(const PlateConfig& config, double tol = 1e-9);

// S = -dF/dT by Richardson-extrapolated central differences,
// h = max(T*1e-3, 1e-3 K).
double entropy(const PlateConfig& config, double tol = 1e-11);

// Zero-temperature energy per unit area (two-dimensional quadrature).
// Rejects dc-augmented models.
double energy_T0(const PlateConfig& config, double tol = 1e-9);

// free_energy - energy_T0 at matching tolerance.
double thermal_correction(const PlateConfig& config, double tol = 1e-9);

// The l = 0 term of the Matsubara sum, in closed polylog form.
double zero_frequency_term(const PlateConfig& config);

enum class SeparationRegime { short_range, long_range };

struct LimitCoefficient {
    double value;    // H (J) for short_range, Psi (J m) for long_range
    double residual; // max relative deviation of the fit over the grid
};

// Fits E(a) = -H/(12*pi*a^2) (short) or E(a) = -Psi/a^3 (long) over a decade
// of separations around config.a.
LimitCoefficient limit_coefficient(const PlateConfig& config, SeparationRegime regime,
                                   double tol = 1e-6);

// Full result bundle with diagnostics.
ThermalResult evaluate(const PlateConfig& config, double tol = 1e-9);

} // namespace lif
