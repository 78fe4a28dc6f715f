#include "lif/models.hpp"
#include "lif/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lif {

DielectricModel DielectricModel::constant(double eps0) {
    if (!(eps0 >= 1.0)) throw std::domain_error("DielectricModel: eps0 must be >= 1");
    DielectricModel m;
    m.kind_ = Kind::constant;
    m.eps0_ = eps0;
    return m;
}

DielectricModel DielectricModel::dilute(double eta) {
    if (!(eta > 0.0)) throw std::domain_error("DielectricModel: eta must be > 0");
    DielectricModel m;
    m.kind_ = Kind::dilute;
    m.eps0_ = 1.0 + eta;
    return m;
}

DielectricModel DielectricModel::oscillators(std::vector<OscillatorTerm> terms) {
    for (const auto& t : terms)
        if (!(t.strength > 0.0) || !(t.omega > 0.0))
            throw std::domain_error("DielectricModel: oscillator terms must be positive");
    DielectricModel m;
    m.kind_ = Kind::oscillators;
    m.terms_ = std::move(terms);
    return m;
}

DielectricModel DielectricModel::tabulated(OpticalTable table, double xi_min) {
    DielectricModel m;
    m.kind_ = Kind::tabulated;
    m.xi_min_ = xi_min;
    // evaluate the dispersion relation on a log grid spanning the table with
    // generous margins; 48 points per decade keeps interpolation error well
    // below the 1e-8 quadrature tolerance for these smooth curves
    const double w_lo = table.samples().front().omega;
    const double w_hi = table.samples().back().omega;
    const double xi_lo = std::max(xi_min, w_lo * 1e-4);
    const double xi_hi = w_hi * 1e3;
    const int per_decade = 48;
    const int n = std::max(2, static_cast<int>(std::ceil(
                                  std::log10(xi_hi / xi_lo) * per_decade)) + 1);
    m.grid_ln_xi_.resize(n);
    m.grid_eps_.resize(n);
    const double l0 = std::log(xi_lo), l1 = std::log(xi_hi);
    for (int i = 0; i < n; ++i) {
        const double lx = l0 + (l1 - l0) * i / (n - 1);
        m.grid_ln_xi_[i] = lx;
        m.grid_eps_[i] = kk_transform(table, std::exp(lx));
    }
    return m;
}

DielectricModel DielectricModel::dc_augmented(DielectricModel base, double sigma0) {
    if (base.kind_ == Kind::dc_aug)
        throw std::domain_error("DielectricModel: nested dc augmentation");
    if (!(sigma0 >= 0.0)) throw std::domain_error("DielectricModel: sigma0 must be >= 0");
    DielectricModel m;
    m.kind_ = Kind::dc_aug;
    m.base_ = std::make_shared<DielectricModel>(std::move(base));
    m.sigma0_ = sigma0;
    return m;
}

const DielectricModel& DielectricModel::dc_base() const {
    if (kind_ != Kind::dc_aug)
        throw std::logic_error("DielectricModel: not dc-augmented");
    return *base_;
}

double DielectricModel::eval(double xi) const {
    if (!(xi >= 0.0)) throw std::domain_error("DielectricModel: xi must be >= 0");
    switch (kind_) {
    case Kind::constant:
    case Kind::dilute:
        return eps0_;
    case Kind::oscillators: {
        double e = 1.0;
        for (const auto& t : terms_) {
            const double r = xi / t.omega;
            e += t.strength / (1.0 + r * r);
        }
        return e;
    }
    case Kind::tabulated: {
        const double lx = std::log(std::max(xi, std::exp(grid_ln_xi_.front())));
        if (lx >= grid_ln_xi_.back()) return grid_eps_.back();
        const auto it = std::upper_bound(grid_ln_xi_.begin(), grid_ln_xi_.end(), lx);
        const size_t i = static_cast<size_t>(it - grid_ln_xi_.begin());
        const double x0 = grid_ln_xi_[i - 1], x1 = grid_ln_xi_[i];
        const double w = (lx - x0) / (x1 - x0);
        return grid_eps_[i - 1] * (1.0 - w) + grid_eps_[i] * w;
    }
    case Kind::dc_aug:
        if (sigma0_ == 0.0) return base_->eval(xi);
        if (xi == 0.0) return std::numeric_limits<double>::infinity();
        return base_->eval(xi) + 4.0 * pi * sigma0_ / xi;
    }
    return 1.0;
}

double DielectricModel::static_permittivity() const {
    if (kind_ == Kind::dc_aug)
        throw std::domain_error(
            "static_permittivity: undefined for dc-augmented models");
    return eval(0.0);
}

double ArrheniusConductivity::at(double T) const {
    if (T <= 0.0) return 0.0;
    return sigma_ref * std::exp(-b / T);
}

double conductivity_beta(double sigma0, double T) {
    if (!(T > 0.0)) throw std::domain_error("conductivity_beta: T must be > 0");
    if (!(sigma0 >= 0.0)) throw std::domain_error("conductivity_beta: sigma0 must be >= 0");
    return 2.0 * hbar * sigma0 / (k_boltzmann * T);
}

} // namespace lif
