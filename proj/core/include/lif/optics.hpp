#pragma once

// Tabulated optical data and the dispersion relation giving the
// permittivity along the imaginary frequency axis:
//   eps(i xi) = 1 + (2/pi) * int_0^inf w*Im(eps(w)) / (w^2 + xi^2) dw

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lif {

enum class LowTail { constant_extension, zero };
enum class HighTail { power_law, zero }; // power_law: A/w^3 fit to the last decade

struct OpticalSample {
    double omega;  // rad/s
    double im_eps; // dimensionless
};

class OpticalTable {
  public:
    OpticalTable(std::vector<OpticalSample> samples,
                 LowTail low = LowTail::constant_extension,
                 HighTail high = HighTail::power_law);

    const std::vector<OpticalSample>& samples() const { return samples_; }
    LowTail low_tail() const { return low_; }
    HighTail high_tail() const { return high_; }
    double high_tail_amplitude() const { return tail_a_; } // A in Im eps ~ A/w^3

    // interpolated Im eps inside the sampled range, 0 outside; monotone
    // cubic in log-log when all samples are positive, segment-wise otherwise
    double im_eps_at(double omega) const;

  private:
    std::vector<OpticalSample> samples_;
    LowTail low_;
    HighTail high_;
    double tail_a_ = 0.0;
    std::vector<double> log_w_, log_i_, slope_; // log-log pchip data (all-positive tables)
};

// Im eps = 2*n1*n2 from refractive index data.
OpticalTable table_from_refractive_index(
    const std::vector<std::array<double, 3>>& points, // (omega, n1, n2)
    LowTail low = LowTail::constant_extension, HighTail high = HighTail::power_law);

// CSV with header "omega_rad_s,n1,n2" or "omega_rad_s,im_eps"; '#' comments.
OpticalTable read_optical_csv(std::istream& in);
OpticalTable read_optical_csv_file(const std::string& path);

// eps(i xi) via the dispersion relation, xi > 0. Relative tolerance 1e-8.
double kk_transform(const OpticalTable& table, double xi);

// Frozen low-frequency value: eps(i xi) for xi <= xi_min is eps(i xi_min).
// Serves as the static permittivity of a tabulated model.
double static_step_extension(const OpticalTable& table, double xi_min);

} // namespace lif
