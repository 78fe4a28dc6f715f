#pragma once

// Closed-form results for two dilute dielectric plates (eps = 1 + eta,
// eta << 1): free energy and pressure exact in tau, and their small-tau
// asymptotics.

namespace lif {

struct DilutePair {
    double eta1;
    double eta2;
    DilutePair(double e1, double e2);
};

// building blocks of the dilute expansion
double dilute_I1(double zeta);
double dilute_I2(double zeta);

// exact-in-tau coefficient functions (tend to 1 as tau -> inf)
double dilute_f1(double tau);
double dilute_f2(double tau);
double dilute_p1(double tau);
double dilute_p2(double tau);

// F = -(hbar*c*tau*eta1*eta2 / 256 pi^2 a^3) [f1 - (eta1+eta2)/2 * f2], J/m^2
double free_energy_exact(const DilutePair& pair, double a, double T);

// P = -(hbar*c*tau*eta1*eta2 / 256 pi^2 a^4) [p1 - (eta1+eta2)/2 * p2], Pa
double pressure_exact(const DilutePair& pair, double a, double T);

struct DiluteAsymptotics {
    double free_energy; // J/m^2
    double pressure;    // Pa
    double entropy;     // J/(m^2 K)
};

// small-tau expansions through the tau^4 (tau^1 for entropy) terms;
// requires tau < 0.5
DiluteAsymptotics asymptotics_lowT(const DilutePair& pair, double a, double T);

} // namespace lif
