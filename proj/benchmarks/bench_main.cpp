#include <benchmark/benchmark.h>

#include "scaling/scaling.hpp"

using namespace scaling;

namespace {

NamedDimension nd(std::string name, std::string_view unit) {
  return {std::move(name), default_registry().parse_unit(unit).dimension};
}

ModelSpec mass_spec(bool quadratic) {
  ModelSpec spec;
  spec.response = {"bmr", *default_registry().find("W")};
  spec.log_predictor = {"mass", *default_registry().find("g")};
  spec.include_quadratic = quadratic;
  return spec;
}

void BM_SolveTargetExponents(benchmark::State& state) {
  const NamedDimension target = nd("r", "m");
  const NamedDimensions params{nd("E", "J"), nd("rho", "kg m^-3"), nd("t", "s")};
  for (auto _ : state) benchmark::DoNotOptimize(solve_target_exponents(target, params));
}
BENCHMARK(BM_SolveTargetExponents);

void BM_PiBasis(benchmark::State& state) {
  const NamedDimensions qs{nd("rho", "kg m^-3"), nd("v", "m s^-1"), nd("l", "m"), nd("eta", "Pa s"),
                           nd("g", "m s^-2"),    nd("d", "m"),        nd("f", "s^-1")};
  for (auto _ : state) benchmark::DoNotOptimize(pi_basis(qs));
}
BENCHMARK(BM_PiBasis);

void BM_ParseUnit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(default_registry().parse_unit("kg m^2 s^-2 K^-1"));
}
BENCHMARK(BM_ParseUnit);

void BM_FitPowerLaw(benchmark::State& state) {
  const DataSet ds = synthetic::kleiber(synthetic::kDefaultSeed, static_cast<std::size_t>(state.range(0)));
  const ModelSpec spec = mass_spec(false);
  for (auto _ : state) benchmark::DoNotOptimize(fit_power_law(ds, spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitPowerLaw)->Arg(60)->Arg(1000)->Arg(100000);

void BM_FitQuadraticAndTransform(benchmark::State& state) {
  const DataSet ds = synthetic::random_quadratic(7, 200);
  const ModelSpec spec = mass_spec(true);
  const Unit& kg = *default_registry().find("kg");
  for (auto _ : state) benchmark::DoNotOptimize(transform_under_unit_change(fit_quadratic_log(ds, spec), kg));
}
BENCHMARK(BM_FitQuadraticAndTransform);

}  // namespace

BENCHMARK_MAIN();
