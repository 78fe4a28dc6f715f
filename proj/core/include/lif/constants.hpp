#pragma once

// Physical constants (CODATA 2018) and the dimensionless variables used
// throughout: tau = 4*pi*k_B*a*T/(hbar*c), zeta_l = tau*l, xi_c = c/(2a).

namespace lif {

inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double c_light = 299792458.0;      // m/s
inline constexpr double k_boltzmann = 1.380649e-23; // J/K
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double zeta3 = 1.2020569031595943; // Riemann zeta(3)

inline constexpr const char* constants_version = "CODATA-2018";

inline constexpr double tau_of(double a, double T) {
    return 4.0 * pi * k_boltzmann * a * T / (hbar * c_light);
}

// characteristic frequency, rad/s
inline constexpr double xi_characteristic(double a) { return c_light / (2.0 * a); }

// l-th Matsubara frequency, rad/s
inline constexpr double xi_matsubara(double T, int l) {
    return 2.0 * pi * k_boltzmann * T * static_cast<double>(l) / hbar;
}

} // namespace lif
