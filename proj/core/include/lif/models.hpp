#pragma once

// Dielectric permittivity along the imaginary frequency axis, eps(i xi).
// Variants: constant, dilute (1+eta), Lorentz oscillator set, tabulated
// optical data (dispersion-relation interpolant), and a dc-conductivity
// augmented wrapper eps + 4*pi*sigma0/xi.

#include "lif/optics.hpp"

#include <memory>
#include <vector>

namespace lif {

struct OscillatorTerm {
    double strength; // C_j, dimensionless
    double omega;    // rad/s
};

class DielectricModel {
  public:
    static DielectricModel constant(double eps0);
    static DielectricModel dilute(double eta);
    static DielectricModel oscillators(std::vector<OscillatorTerm> terms);
    // Pre-computes the dispersion-relation interpolant at construction.
    static DielectricModel tabulated(OpticalTable table, double xi_min = 1e10);
    // sigma0 in Gaussian units, s^-1 (4*pi*sigma0 is rad/s).
    static DielectricModel dc_augmented(DielectricModel base, double sigma0);

    // eps(i xi). For DcAugmented at xi == 0 returns the distinguished
    // "infinite" marker (+inf); only the zero-frequency reflection logic may
    // consume it.
    double eval(double xi) const;

    // eps(i*0). Throws for DcAugmented (pathological static limit).
    double static_permittivity() const;

    bool is_dc_augmented() const { return kind_ == Kind::dc_aug; }
    double dc_sigma0() const { return sigma0_; }
    const DielectricModel& dc_base() const;

  private:
    enum class Kind { constant, dilute, oscillators, tabulated, dc_aug };
    Kind kind_ = Kind::constant;
    double eps0_ = 1.0;                    // constant / dilute payload
    std::vector<OscillatorTerm> terms_;    // oscillators payload
    // tabulated payload: log-spaced xi grid with precomputed eps values
    std::vector<double> grid_ln_xi_;
    std::vector<double> grid_eps_;
    double xi_min_ = 0.0;
    // dc payload
    std::shared_ptr<const DielectricModel> base_;
    double sigma0_ = 0.0;
};

struct ArrheniusConductivity {
    double sigma_ref; // s^-1
    double b;         // K, activation temperature
    double at(double T) const; // sigma_ref * exp(-b/T); 0 at T = 0
};

// beta = 2*hbar*sigma0/(k_B*T); throws for T <= 0.
double conductivity_beta(double sigma0, double T);

} // namespace lif
