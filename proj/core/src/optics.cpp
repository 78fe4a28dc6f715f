#include "lif/optics.hpp"
#include "lif/constants.hpp"
#include "lif/quadrature.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lif {

namespace {

// least-squares amplitude of Im eps ~ A/w^3 over the last decade of samples
double fit_power_tail(const std::vector<OpticalSample>& s) {
    const double w_hi = s.back().omega;
    double sum = 0.0;
    int n = 0;
    for (auto it = s.rbegin(); it != s.rend() && it->omega >= 0.1 * w_hi; ++it) {
        if (it->im_eps <= 0.0) continue;
        sum += std::log(it->im_eps) + 3.0 * std::log(it->omega);
        ++n;
    }
    return n > 0 ? std::exp(sum / n) : 0.0;
}

} // namespace

OpticalTable::OpticalTable(std::vector<OpticalSample> samples, LowTail low, HighTail high)
    : samples_(std::move(samples)), low_(low), high_(high) {
    if (samples_.size() < 8)
        throw std::invalid_argument("OpticalTable: need at least 8 samples");
    for (size_t i = 0; i < samples_.size(); ++i) {
        if (!(samples_[i].omega > 0.0) || !(samples_[i].im_eps >= 0.0))
            throw std::invalid_argument("OpticalTable: omega must be > 0, Im eps >= 0");
        if (i > 0 && !(samples_[i].omega > samples_[i - 1].omega))
            throw std::invalid_argument("OpticalTable: omegas must be strictly increasing");
    }
    if (high_ == HighTail::power_law) tail_a_ = fit_power_tail(samples_);

    // precompute monotone-cubic (Fritsch-Carlson) node slopes in log-log
    // space; only usable when every sample is positive
    bool all_positive = true;
    for (const auto& s : samples_) all_positive = all_positive && s.im_eps > 0.0;
    if (!all_positive) return;
    const size_t n = samples_.size();
    log_w_.resize(n);
    log_i_.resize(n);
    slope_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        log_w_[i] = std::log(samples_[i].omega);
        log_i_[i] = std::log(samples_[i].im_eps);
    }
    std::vector<double> h(n - 1), d(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = log_w_[i + 1] - log_w_[i];
        d[i] = (log_i_[i + 1] - log_i_[i]) / h[i];
    }
    slope_[0] = d[0];
    slope_[n - 1] = d[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            slope_[i] = 0.0; // local extremum: flatten to avoid overshoot
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
}

double OpticalTable::im_eps_at(double omega) const {
    if (omega < samples_.front().omega || omega > samples_.back().omega) return 0.0;
    size_t lo = 0, hi = samples_.size() - 1;
    while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        (samples_[mid].omega <= omega ? lo : hi) = mid;
    }
    const auto& a = samples_[lo];
    const auto& b = samples_[hi];
    if (!slope_.empty()) {
        // cubic Hermite in log-log with monotone slopes
        const double hseg = log_w_[hi] - log_w_[lo];
        const double t = (std::log(omega) - log_w_[lo]) / hseg;
        const double t2 = t * t, t3 = t2 * t;
        const double v = (2.0 * t3 - 3.0 * t2 + 1.0) * log_i_[lo] +
                         (t3 - 2.0 * t2 + t) * hseg * slope_[lo] +
                         (-2.0 * t3 + 3.0 * t2) * log_i_[hi] +
                         (t3 - t2) * hseg * slope_[hi];
        return std::exp(v);
    }
    // zeros present: log-log per segment where possible, else linear
    if (a.im_eps > 0.0 && b.im_eps > 0.0) {
        const double t = std::log(omega / a.omega) / std::log(b.omega / a.omega);
        return std::exp(std::log(a.im_eps) * (1.0 - t) + std::log(b.im_eps) * t);
    }
    const double t = (omega - a.omega) / (b.omega - a.omega);
    return a.im_eps * (1.0 - t) + b.im_eps * t;
}

OpticalTable table_from_refractive_index(const std::vector<std::array<double, 3>>& points,
                                         LowTail low, HighTail high) {
    std::vector<OpticalSample> s;
    s.reserve(points.size());
    for (const auto& p : points) {
        if (!(p[1] > 0.0) || !(p[2] >= 0.0))
            throw std::invalid_argument("table_from_refractive_index: need n1 > 0, n2 >= 0");
        s.push_back({p[0], 2.0 * p[1] * p[2]});
    }
    return OpticalTable(std::move(s), low, high);
}

OpticalTable read_optical_csv(std::istream& in) {
    std::string line;
    bool have_header = false;
    bool refractive = false;
    std::vector<OpticalSample> direct;
    std::vector<std::array<double, 3>> nk;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!have_header) {
            std::string h = line.substr(first);
            if (h.rfind("omega_rad_s,n1,n2", 0) == 0) refractive = true;
            else if (h.rfind("omega_rad_s,im_eps", 0) == 0) refractive = false;
            else throw std::invalid_argument("optical CSV: unknown header: " + h);
            have_header = true;
            continue;
        }
        std::istringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (refractive) {
            if (row.size() != 3) throw std::invalid_argument("optical CSV: expected 3 columns");
            nk.push_back({row[0], row[1], row[2]});
        } else {
            if (row.size() != 2) throw std::invalid_argument("optical CSV: expected 2 columns");
            direct.push_back({row[0], row[1]});
        }
    }
    if (!have_header) throw std::invalid_argument("optical CSV: missing header");
    if (refractive) return table_from_refractive_index(nk);
    return OpticalTable(std::move(direct));
}

OpticalTable read_optical_csv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open optical table: " + path);
    return read_optical_csv(f);
}

double kk_transform(const OpticalTable& table, double xi) {
    if (!(xi > 0.0)) throw std::domain_error("kk_transform: xi must be > 0");
    const auto& s = table.samples();
    const double w_lo = s.front().omega;
    const double w_hi = s.back().omega;

    const auto integrand = [&](double w) {
        return w * table.im_eps_at(w) / (w * w + xi * xi);
    };

    // rough scale for the absolute tolerance of each piece
    const double scale = std::max(1e-30, table.im_eps_at(std::sqrt(w_lo * w_hi)));
    const double abs_tol = 1e-9 * scale;

    double total = 0.0;
    // below the table: constant extension of the first sample (flat-step
    // convention) integrates in closed form
    if (table.low_tail() == LowTail::constant_extension && s.front().im_eps > 0.0)
        total += 0.5 * s.front().im_eps * std::log1p(w_lo * w_lo / (xi * xi));

    // tabulated range, panel per sample interval; split the panel containing
    // xi where the weight peaks
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        const double a = s[i].omega, b = s[i + 1].omega;
        if (xi > a && xi < b) {
            total += integrate(integrand, a, xi, abs_tol);
            total += integrate(integrand, xi, b, abs_tol);
        } else {
            total += integrate(integrand, a, b, abs_tol);
        }
    }

    // above the table: Im eps ~ A/w^3 integrates in closed form
    if (table.high_tail() == HighTail::power_law && table.high_tail_amplitude() > 0.0) {
        const double A = table.high_tail_amplitude();
        total += A / (xi * xi) *
                 (1.0 / w_hi - (pi / 2.0 - std::atan(w_hi / xi)) / xi);
    }

    return 1.0 + 2.0 / pi * total;
}

double static_step_extension(const OpticalTable& table, double xi_min) {
    if (!(xi_min > 0.0)) throw std::domain_error("static_step_extension: xi_min must be > 0");
    return kk_transform(table, xi_min);
}

} // namespace lif
