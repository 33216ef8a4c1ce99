#include <benchmark/benchmark.h>

#include "vacpol/coulomb.hpp"
#include "vacpol/landau.hpp"
#include "vacpol/polarization.hpp"

namespace {

const vacpol::PhysicalConstants kC = vacpol::make_si_constants();

vacpol::ParticleRegistry electron_only() {
  return vacpol::ParticleRegistry::from_species(
      {{"electron", -1.0, vacpol::kElectronMassGev, 1}});
}

void bm_delta_pi_electron(benchmark::State& state) {
  const auto reg = electron_only();
  const auto k2 = vacpol::wavevector_from_k2(
      -100.0 * vacpol::kElectronMassGev * vacpol::kElectronMassGev);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vacpol::delta_pi_exact(k2, reg, kC));
  }
}
BENCHMARK(bm_delta_pi_electron);

void bm_delta_pi_fermion_table(benchmark::State& state) {
  const auto reg = vacpol::preset(vacpol::Preset::sm_fermions);
  const auto k2 = vacpol::wavevector_from_k2(-100.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vacpol::delta_pi_exact(k2, reg, kC));
  }
}
BENCHMARK(bm_delta_pi_fermion_table);

void bm_delta_pi_timelike(benchmark::State& state) {
  const auto reg = electron_only();
  const auto k2 = vacpol::wavevector_from_k2(
      9.0 * vacpol::kElectronMassGev * vacpol::kElectronMassGev);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vacpol::delta_pi_exact(k2, reg, kC));
  }
}
BENCHMARK(bm_delta_pi_timelike);

void bm_landau_solve(benchmark::State& state) {
  const auto reg = vacpol::preset(vacpol::Preset::sm_fermions);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vacpol::solve_landau_pole(reg, kC));
  }
}
BENCHMARK(bm_landau_solve);

void bm_screening_correction(benchmark::State& state) {
  const auto reg = electron_only();
  const double rho = std::pow(10.0, -double(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vacpol::screening_correction(
        rho, reg, kC, vacpol::PotentialMode::linearized));
  }
}
BENCHMARK(bm_screening_correction)->Arg(0)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();
