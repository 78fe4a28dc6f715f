// Command-line driver: single computations, temperature/separation sweeps,
// dispersion-relation curves, and validation suites.
//
// Commands: compute, sweep, kk, validate.
// Exit codes: 0 ok, 1 usage/config error, 2 convergence failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "lif/constants.hpp"
#include "lif/dilute.hpp"
#include "lif/lowtemp.hpp"
#include "lif/matsubara.hpp"
#include "lif/nernst.hpp"
#include "lif/optics.hpp"
#include "lif/specfunc.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using nlohmann::json;

namespace {

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
};

Range parse_range(const std::string& s) {
    Range r;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> r.lo >> c1 >> r.hi >> c2 >> r.n) || c1 != ':' || c2 != ':')
        throw std::invalid_argument("range must be LO:HI:N, got '" + s + "'");
    if (r.n < 2) throw std::invalid_argument("range needs at least 2 points");
    if (!(r.hi > r.lo)) throw std::invalid_argument("range needs positive extent");
    return r;
}

lif::DielectricModel parse_model(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("model spec needs a 'type' field");
    const std::string type = j.at("type");
    if (type == "constant") return lif::DielectricModel::constant(j.at("eps0"));
    if (type == "dilute") return lif::DielectricModel::dilute(j.at("eta"));
    if (type == "oscillators") {
        std::vector<lif::OscillatorTerm> terms;
        for (const auto& t : j.at("terms"))
            terms.push_back({t.at(0).get<double>(), t.at(1).get<double>()});
        return lif::DielectricModel::oscillators(std::move(terms));
    }
    if (type == "tabulated") {
        const auto table = lif::read_optical_csv_file(j.at("csv"));
        const double xi_min = j.value("xi_min", 1e10);
        return lif::DielectricModel::tabulated(table, xi_min);
    }
    if (type == "dc") {
        return lif::DielectricModel::dc_augmented(parse_model(j.at("base")),
                                                  j.at("sigma0"));
    }
    throw std::invalid_argument("unknown model type '" + type + "'");
}

// FNV-1a over the canonical config serialization
std::uint64_t config_hash(const json& j) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct RunConfig {
    json raw;
    lif::DielectricModel model1 = lif::DielectricModel::constant(1.0);
    lif::DielectricModel model2 = lif::DielectricModel::constant(1.0);
    double a = 4e-7;
    double T = 300.0;
    double tol = 1e-9;
    std::optional<Range> a_range;
    std::optional<Range> T_range;
    std::string table_csv;
};

RunConfig load_config(const std::string& config_path, const std::string& a_flag,
                      const std::string& T_flag, double tol_flag,
                      const std::string& a_range_flag, const std::string& T_range_flag,
                      double eps1_flag, double eps2_flag, const std::string& table_flag) {
    json j = json::object();
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config file " + config_path);
        in >> j;
    }
    // flag overrides win over the file
    if (!a_flag.empty()) j["a"] = std::stod(a_flag);
    if (!T_flag.empty()) j["T"] = std::stod(T_flag);
    if (tol_flag > 0.0) j["tol"] = tol_flag;
    if (!a_range_flag.empty()) j["a_range"] = a_range_flag;
    if (!T_range_flag.empty()) j["T_range"] = T_range_flag;
    if (eps1_flag > 0.0) j["model1"] = {{"type", "constant"}, {"eps0", eps1_flag}};
    if (eps2_flag > 0.0) j["model2"] = {{"type", "constant"}, {"eps0", eps2_flag}};
    if (!table_flag.empty()) j["table"] = table_flag;

    RunConfig cfg;
    cfg.raw = j;
    if (j.contains("model1")) cfg.model1 = parse_model(j["model1"]);
    if (j.contains("model2")) cfg.model2 = parse_model(j["model2"]);
    if (j.contains("a")) cfg.a = j["a"];
    if (j.contains("T")) cfg.T = j["T"];
    if (j.contains("tol")) cfg.tol = j["tol"];
    if (j.contains("a_range")) cfg.a_range = parse_range(j["a_range"]);
    if (j.contains("T_range")) cfg.T_range = parse_range(j["T_range"]);
    if (j.contains("table")) cfg.table_csv = j["table"];
    if (!(cfg.tol >= 1e-12 && cfg.tol <= 1e-3))
        throw std::invalid_argument("field 'tol' must be in [1e-12, 1e-3]");
    if (!(cfg.a > 0.0)) throw std::invalid_argument("field 'a' must be positive");
    if (cfg.T < 0.0) throw std::invalid_argument("field 'T' must be non-negative");
    return cfg;
}

std::string fmt(double v) {
    if (v == 0.0) v = 0.0; // canonicalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v); // 17 significant digits
    return buf;
}

void write_header(std::ostream& out, const std::string& command, const RunConfig& cfg) {
    out << "# lifshitz " << command << "\n";
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg.raw)));
    out << "# config-hash: " << hash << "\n";
    out << "# constants: " << lif::constants_version << "\n";
    out << "# tolerance: " << fmt(cfg.tol) << "\n";
}

json meta_block(const std::string& command, const RunConfig& cfg) {
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg.raw)));
    return {{"command", command},
            {"config_hash", hash},
            {"constants", lif::constants_version},
            {"tolerance", cfg.tol}};
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file " + path);
    return file;
}

int worker_count(int n_points) {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("LIFSHITZ_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return std::min(n, n_points);
}

// parallel map over grid indices; results land by index so the assembled
// output is identical for any worker count
template <class F>
void parallel_for(int n, const F& body) {
    const int workers = worker_count(n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& t : pool) t.join();
}

int cmd_compute(const RunConfig& cfg, const std::string& format,
                const std::string& out_path) {
    const lif::PlateConfig pc(cfg.model1, cfg.model2, cfg.a, cfg.T);
    json result;
    if (cfg.T == 0.0) {
        result["free_energy_J_m2"] = lif::energy_T0(pc, cfg.tol);
        // pressure and entropy need T > 0; the T = 0 branch reports energy only
    } else {
        const auto r = lif::evaluate(pc, cfg.tol);
        result["free_energy_J_m2"] = r.free_energy_per_area;
        result["pressure_Pa"] = r.pressure;
        result["entropy_J_m2K"] = r.entropy_per_area;
        result["l_max"] = r.l_max_used;
        result["error_estimate"] = r.quadrature_error_estimate;
    }
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (format == "json") {
        json doc = {{"meta", meta_block("compute", cfg)}, {"result", result}};
        out << doc.dump(2) << "\n";
    } else {
        write_header(out, "compute", cfg);
        out << "quantity,value\n";
        for (const auto& [k, v] : result.items()) {
            if (v.is_number_float())
                out << k << "," << fmt(v.get<double>()) << "\n";
            else
                out << k << "," << v.dump() << "\n";
        }
    }
    return 0;
}

struct SweepRow {
    double x;
    double df_model, df_static, df_asym;
    double dp_model, dp_static, dp_asym;
};

// -dE/da by Richardson central differences: the T = 0 pressure
double pressure_T0(const lif::DielectricModel& m1, const lif::DielectricModel& m2,
                   double a, double tol) {
    const double h = a * 1e-3;
    const auto e_at = [&](double ai) {
        return lif::energy_T0(lif::PlateConfig(m1, m2, ai, 0.0), tol);
    };
    const auto central = [&](double step) {
        return -(e_at(a + step) - e_at(a - step)) / (2.0 * step);
    };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& format,
              const std::string& out_path) {
    if (cfg.model1.is_dc_augmented() || cfg.model2.is_dc_augmented())
        throw std::invalid_argument("sweep: dc-augmented models are not supported "
                                    "(the zero-temperature reference is undefined)");
    if (cfg.a_range && cfg.T_range)
        throw std::invalid_argument("sweep: give either a_range or T_range, not both");
    if (!cfg.a_range && !cfg.T_range)
        throw std::invalid_argument("sweep: needs a_range or T_range");

    const bool over_T = cfg.T_range.has_value();
    const Range range = over_T ? *cfg.T_range : *cfg.a_range;
    const double e1 = cfg.model1.static_permittivity();
    const double e2 = cfg.model2.static_permittivity();
    const auto s1 = lif::DielectricModel::constant(e1);
    const auto s2 = lif::DielectricModel::constant(e2);

    // T-independent references are hoisted out of the grid loop
    double E_model = 0.0, E_static = 0.0, P0_model = 0.0, P0_static = 0.0;
    if (over_T) {
        E_model = lif::energy_T0(lif::PlateConfig(cfg.model1, cfg.model2, cfg.a, 0.0),
                                 cfg.tol);
        E_static = lif::energy_T0(lif::PlateConfig(s1, s2, cfg.a, 0.0), cfg.tol);
        P0_model = pressure_T0(cfg.model1, cfg.model2, cfg.a, cfg.tol);
        P0_static = pressure_T0(s1, s2, cfg.a, cfg.tol);
    }

    std::vector<SweepRow> rows(range.n);
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;
    parallel_for(range.n, [&](int i) {
        if (failed.load()) return;
        try {
            const double x = range.lo + (range.hi - range.lo) * i / (range.n - 1);
            const double a = over_T ? cfg.a : x;
            const double T = over_T ? x : cfg.T;
            SweepRow row;
            row.x = x;
            const double em =
                over_T ? E_model
                       : lif::energy_T0(lif::PlateConfig(cfg.model1, cfg.model2, a, 0.0),
                                        cfg.tol);
            const double es = over_T ? E_static
                                     : lif::energy_T0(lif::PlateConfig(s1, s2, a, 0.0),
                                                      cfg.tol);
            const double p0m =
                over_T ? P0_model : pressure_T0(cfg.model1, cfg.model2, a, cfg.tol);
            const double p0s = over_T ? P0_static : pressure_T0(s1, s2, a, cfg.tol);
            row.df_model = lif::free_energy(
                               lif::PlateConfig(cfg.model1, cfg.model2, a, T), cfg.tol) -
                           em;
            row.df_static =
                lif::free_energy(lif::PlateConfig(s1, s2, a, T), cfg.tol) - es;
            row.dp_model =
                lif::pressure(lif::PlateConfig(cfg.model1, cfg.model2, a, T), cfg.tol) -
                p0m;
            row.dp_static = lif::pressure(lif::PlateConfig(s1, s2, a, T), cfg.tol) - p0s;
            const double tau = lif::tau_of(a, T);
            if (tau < 0.5) {
                row.df_asym = lif::free_energy_lowT(0.0, e1, e2, a, T);
                row.dp_asym = lif::pressure_lowT(0.0, e1, e2, a, T);
            } else {
                row.df_asym = std::nan("");
                row.dp_asym = std::nan("");
            }
            rows[i] = row;
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            failed = true;
            failure = e.what();
        }
    });
    if (failed) throw std::runtime_error("sweep point failed: " + failure);

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    const char* xname = over_T ? "T_K" : "a_m";
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{xname, r.x},
                           {"dF_model_J_m2", r.df_model},
                           {"dF_static_J_m2", r.df_static},
                           {"dF_asymptotic_J_m2", r.df_asym},
                           {"dP_model_Pa", r.dp_model},
                           {"dP_static_Pa", r.dp_static},
                           {"dP_asymptotic_Pa", r.dp_asym}});
        json doc = {{"meta", meta_block("sweep", cfg)}, {"rows", arr}};
        out << doc.dump(2) << "\n";
    } else {
        write_header(out, "sweep", cfg);
        out << xname
            << ",dF_model_J_m2,dF_static_J_m2,dF_asymptotic_J_m2"
               ",dP_model_Pa,dP_static_Pa,dP_asymptotic_Pa\n";
        for (const auto& r : rows)
            out << fmt(r.x) << "," << fmt(r.df_model) << "," << fmt(r.df_static) << ","
                << fmt(r.df_asym) << "," << fmt(r.dp_model) << "," << fmt(r.dp_static)
                << "," << fmt(r.dp_asym) << "\n";
    }
    return 0;
}

int cmd_kk(const RunConfig& cfg, const std::string& xi_range_flag,
           const std::string& format, const std::string& out_path) {
    if (cfg.table_csv.empty())
        throw std::invalid_argument("kk: needs a table (config field 'table' or --table)");
    const auto table = lif::read_optical_csv_file(cfg.table_csv);
    const Range r = xi_range_flag.empty() ? Range{1e12, 1e18, 121}
                                          : parse_range(xi_range_flag);
    if (!(r.lo > 0.0)) throw std::invalid_argument("kk: xi range must be positive");

    std::vector<double> xi(r.n), eps(r.n);
    for (int i = 0; i < r.n; ++i)
        xi[i] = r.lo * std::pow(r.hi / r.lo, static_cast<double>(i) / (r.n - 1));
    parallel_for(r.n, [&](int i) { eps[i] = lif::kk_transform(table, xi[i]); });

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (format == "json") {
        json arr = json::array();
        for (int i = 0; i < r.n; ++i)
            arr.push_back({{"xi_rad_s", xi[i]}, {"eps", eps[i]}});
        json doc = {{"meta", meta_block("kk", cfg)}, {"rows", arr}};
        out << doc.dump(2) << "\n";
    } else {
        write_header(out, "kk", cfg);
        out << "xi_rad_s,eps\n";
        for (int i = 0; i < r.n; ++i) out << fmt(xi[i]) << "," << fmt(eps[i]) << "\n";
    }
    return 0;
}

struct Check {
    std::string name;
    bool pass;
    double measured;
    double bound;
};

std::vector<Check> suite_dilute() {
    std::vector<Check> checks;
    // engine vs the closed form at tau = 0.1 (the closed form drops O(eta^4))
    const double a = 4e-7;
    const double T = 0.1 / lif::tau_of(a, 1.0);
    const lif::PlateConfig pc(lif::DielectricModel::constant(1.001),
                              lif::DielectricModel::constant(1.002), a, T);
    const double engine = lif::free_energy(pc, 1e-10);
    const double closed = lif::free_energy_exact(lif::DilutePair(0.001, 0.002), a, T);
    const double rel = std::abs(engine / closed - 1.0);
    checks.push_back({"engine_vs_closed_form", rel <= 1e-5, rel, 1e-5});
    // small-tau expansion bound at tau = 0.05
    const double tau = 0.05;
    const double asym = 46.0 / (15.0 * tau) +
                        lif::zeta3 / (2.0 * lif::pi * lif::pi) * tau * tau -
                        7.0 * tau * tau * tau / 360.0;
    const double gap = std::abs(lif::dilute_f1(tau) - asym);
    checks.push_back({"small_tau_expansion", gap <= 5.0 * std::pow(tau, 4), gap,
                      5.0 * std::pow(tau, 4)});
    // high-tau limit
    const double hi = std::abs(lif::dilute_f1(20.0) - 1.0);
    checks.push_back({"high_tau_limit", hi <= std::exp(-10.0), hi, std::exp(-10.0)});
    return checks;
}

std::vector<Check> suite_nernst() {
    std::vector<Check> checks;
    const double a = 4e-7;
    const double resid = lif::entropy_residual_at_zero(11.66, 3.84, a);
    checks.push_back({"residual_positive", resid > 0.0, resid, 0.0});
    // low-T free-energy shift equals the closed bracket
    const lif::PlateConfig base(lif::DielectricModel::constant(11.66),
                                lif::DielectricModel::constant(3.84), a, 300.0);
    const lif::DcStudyConfig study(base, {53.3, 300.0}, {53.3, 300.0});
    const double T = 10.0;
    const double shift =
        lif::free_energy_with_dc(study, T, 1e-11) -
        lif::free_energy(lif::PlateConfig(base.model1, base.model2, a, T), 1e-11);
    const double r0 = (11.66 - 1.0) / (11.66 + 1.0) * (3.84 - 1.0) / (3.84 + 1.0);
    const double bracket = -lif::k_boltzmann * T / (16.0 * lif::pi * a * a) *
                           (lif::zeta3 - lif::polylog(3, r0));
    const double rel = std::abs(shift / bracket - 1.0);
    checks.push_back({"dc_shift_bracket", rel <= 1e-5, rel, 1e-5});
    return checks;
}

std::vector<Check> suite_lowtemp() {
    std::vector<Check> checks;
    for (double e0 : {2.0, 3.84, 11.66}) {
        const double s = std::sqrt(e0);
        const double closed = (s - 1.0) * (e0 * e0 + e0 * s - 2.0) / 720.0;
        const double rel = std::abs(lif::c4_coefficient(e0, e0) / closed - 1.0);
        checks.push_back({"c4_similar_plates", rel <= 1e-10, rel, 1e-10});
    }
    const double asm_rel =
        std::abs((lif::phi_par_x3_coefficient(11.66, 3.84) +
                  lif::phi_perp_x3_coefficient(11.66, 3.84)) /
                     720.0 / lif::c4_coefficient(11.66, 3.84) -
                 1.0);
    checks.push_back({"c4_assembly", asm_rel <= 1e-12, asm_rel, 1e-12});
    return checks;
}

std::vector<Check> suite_optics() {
    std::vector<Check> checks;
    // synthetic Lorentz absorption with a closed-form transform
    const double A = 10.0 * 1e30, w0 = 1e15, g = 1e14;
    std::vector<lif::OpticalSample> s;
    const int n = 60 * 6 + 1;
    for (int i = 0; i < n; ++i) {
        const double w = 1e12 * std::pow(1e6, static_cast<double>(i) / (n - 1));
        const double d = w0 * w0 - w * w;
        s.push_back({w, A * g * w / (d * d + g * g * w * w)});
    }
    const lif::OpticalTable table(std::move(s));
    double worst = 0.0;
    for (double xi = 1e13; xi < 1.1e17; xi *= 10.0) {
        const double exact = 1.0 + A / (w0 * w0 + g * xi + xi * xi);
        worst = std::max(worst, std::abs(lif::kk_transform(table, xi) / exact - 1.0));
    }
    checks.push_back({"lorentz_round_trip", worst <= 0.01, worst, 0.01});
    return checks;
}

int cmd_validate(const RunConfig& cfg, const std::string& suite,
                 const std::string& out_path) {
    std::vector<std::pair<std::string, std::vector<Check>>> report;
    const auto run = [&](const std::string& name) {
        if (name == "dilute") report.emplace_back(name, suite_dilute());
        else if (name == "nernst") report.emplace_back(name, suite_nernst());
        else if (name == "lowtemp") report.emplace_back(name, suite_lowtemp());
        else if (name == "optics") report.emplace_back(name, suite_optics());
        else throw std::invalid_argument("unknown suite '" + name + "'");
    };
    if (suite == "all") {
        run("dilute");
        run("nernst");
        run("lowtemp");
        run("optics");
    } else {
        run(suite);
    }

    bool all_pass = true;
    json suites = json::array();
    for (const auto& [name, checks] : report) {
        json arr = json::array();
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            arr.push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"measured", c.measured},
                           {"bound", c.bound}});
        }
        suites.push_back({{"suite", name}, {"checks", arr}});
    }
    json doc = {{"meta", meta_block("validate", cfg)},
                {"suites", suites},
                {"all_pass", all_pass}};
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << doc.dump(2) << "\n";
    return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir free energy, pressure, and entropy between "
                 "dielectric half-spaces"};
    app.require_subcommand(1);

    std::string config_path, a_flag, T_flag, a_range, T_range, out_path, table_path;
    std::string format = "csv", suite = "all", xi_range;
    double tol_flag = -1.0, eps1 = -1.0, eps2 = -1.0;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--a", a_flag, "separation, m");
        sub->add_option("--T", T_flag, "temperature, K");
        sub->add_option("--tol", tol_flag, "relative tolerance");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--eps1", eps1, "constant eps0 for plate 1");
        sub->add_option("--eps2", eps2, "constant eps0 for plate 2");
    };

    auto* compute = app.add_subcommand("compute", "single-point evaluation");
    add_common(compute);

    auto* sweep = app.add_subcommand("sweep", "temperature or separation sweep");
    add_common(sweep);
    sweep->add_option("--a-range", a_range, "LO:HI:N separations, m");
    sweep->add_option("--T-range", T_range, "LO:HI:N temperatures, K");

    auto* kk = app.add_subcommand("kk", "permittivity along the imaginary axis");
    add_common(kk);
    kk->add_option("--table", table_path, "optical data CSV");
    kk->add_option("--xi-range", xi_range, "LO:HI:N frequencies, rad/s (log-spaced)");

    auto* validate = app.add_subcommand("validate", "run validation suites");
    add_common(validate);
    validate->add_option("--suite", suite,
                         "dilute, nernst, lowtemp, optics, or all");

    CLI11_PARSE(app, argc, argv);

    try {
        const RunConfig cfg = load_config(config_path, a_flag, T_flag, tol_flag, a_range,
                                          T_range, eps1, eps2, table_path);
        if (compute->parsed()) return cmd_compute(cfg, format, out_path);
        if (sweep->parsed()) return cmd_sweep(cfg, format, out_path);
        if (kk->parsed()) return cmd_kk(cfg, xi_range, format, out_path);
        if (validate->parsed()) return cmd_validate(cfg, suite, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
