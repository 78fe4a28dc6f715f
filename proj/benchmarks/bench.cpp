#include <benchmark/benchmark.h>

#include "lif/dilute.hpp"
#include "lif/lowtemp.hpp"
#include "lif/matsubara.hpp"
#include "lif/optics.hpp"
#include "lif/specfunc.hpp"

#include <cmath>
#include <vector>

namespace {

lif::PlateConfig si_sio2(double T) {
    return lif::PlateConfig(lif::DielectricModel::constant(11.66),
                            lif::DielectricModel::constant(3.84), 4e-7, T);
}

lif::OpticalTable lorentz_table() {
    const double A = 10.0 * 1e30, w0 = 1e15, g = 1e14;
    std::vector<lif::OpticalSample> s;
    const int n = 60 * 6 + 1;
    for (int i = 0; i < n; ++i) {
        const double w = 1e12 * std::pow(1e6, static_cast<double>(i) / (n - 1));
        const double d = w0 * w0 - w * w;
        s.push_back({w, A * g * w / (d * d + g * g * w * w)});
    }
    return lif::OpticalTable(std::move(s));
}

void bm_polylog(benchmark::State& state) {
    double z = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lif::polylog(3, z));
        z = 0.3 + 0.6 * (z < 0.6); // alternate the branch taken
    }
}
BENCHMARK(bm_polylog);

void bm_exp_integral(benchmark::State& state) {
    double x = -0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lif::exp_integral_ei(x));
        x = (x < -5.0) ? -0.5 : x - 1.0;
    }
}
BENCHMARK(bm_exp_integral);

void bm_free_energy_300K(benchmark::State& state) {
    const auto cfg = si_sio2(300.0);
    for (auto _ : state) benchmark::DoNotOptimize(lif::free_energy(cfg, 1e-9));
}
BENCHMARK(bm_free_energy_300K);

void bm_free_energy_cold(benchmark::State& state) {
    const auto cfg = si_sio2(30.0); // long Matsubara sum
    for (auto _ : state) benchmark::DoNotOptimize(lif::free_energy(cfg, 1e-9));
}
BENCHMARK(bm_free_energy_cold);

void bm_pressure_300K(benchmark::State& state) {
    const auto cfg = si_sio2(300.0);
    for (auto _ : state) benchmark::DoNotOptimize(lif::pressure(cfg, 1e-9));
}
BENCHMARK(bm_pressure_300K);

void bm_energy_T0(benchmark::State& state) {
    const auto cfg = si_sio2(0.0);
    for (auto _ : state) benchmark::DoNotOptimize(lif::energy_T0(cfg, 1e-8));
}
BENCHMARK(bm_energy_T0);

void bm_kk_transform(benchmark::State& state) {
    const auto table = lorentz_table();
    for (auto _ : state) benchmark::DoNotOptimize(lif::kk_transform(table, 1e15));
}
BENCHMARK(bm_kk_transform);

void bm_dilute_f1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lif::dilute_f1(0.05));
}
BENCHMARK(bm_dilute_f1);

void bm_c4_coefficient(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lif::c4_coefficient(11.66, 3.84));
}
BENCHMARK(bm_c4_coefficient);

} // namespace

BENCHMARK_MAIN();
