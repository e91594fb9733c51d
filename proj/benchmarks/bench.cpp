#include <benchmark/benchmark.h>

#include "cylo/catalog.hpp"
#include "cylo/completion.hpp"
#include "cylo/duality.hpp"
#include "cylo/filters.hpp"
#include "cylo/frame.hpp"
#include "cylo/space.hpp"

namespace {

using namespace cylo;

void BM_ValidateCylindric(benchmark::State& state, const char* name) {
  CylindricOrtholattice A = catalog_algebra(name);
  for (auto _ : state) benchmark::DoNotOptimize(validate_cylindric(A).ok());
}
BENCHMARK_CAPTURE(BM_ValidateCylindric, ps4, "PS4");
BENCHMARK_CAPTURE(BM_ValidateCylindric, mol12, "mOL12");

void BM_EnumerateFilters(benchmark::State& state, const char* name) {
  CylindricOrtholattice A = catalog_algebra(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_proper_filters(A.lat).size());
}
BENCHMARK_CAPTURE(BM_EnumerateFilters, ps4, "PS4");
BENCHMARK_CAPTURE(BM_EnumerateFilters, b8, "B8");

void BM_BclosedFamily(benchmark::State& state, const char* name) {
  CylindricOrthoFrame fr = goldblatt_frame(catalog_algebra(name));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bclosed(fr).size());
}
BENCHMARK_CAPTURE(BM_BclosedFamily, mo2, "MO2");
BENCHMARK_CAPTURE(BM_BclosedFamily, ps4, "PS4");

void BM_CanonicalCompletion(benchmark::State& state, const char* name) {
  CylindricOrtholattice A = catalog_algebra(name);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_completion(A).certificates.ok());
}
BENCHMARK_CAPTURE(BM_CanonicalCompletion, b4, "B4");
BENCHMARK_CAPTURE(BM_CanonicalCompletion, o6, "O6");

void BM_SpectrumSpace(benchmark::State& state, const char* name) {
  CylindricOrtholattice A = catalog_algebra(name);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_space(A).opens.size());
}
BENCHMARK_CAPTURE(BM_SpectrumSpace, b8, "B8");
BENCHMARK_CAPTURE(BM_SpectrumSpace, ps4, "PS4");

void BM_OpenFamilies(benchmark::State& state) {
  FiniteSpace X = boolean_spectrum(catalog_algebra("PS4"));
  for (auto _ : state) benchmark::DoNotOptimize(open_families(X).coreg.size());
}
BENCHMARK(BM_OpenFamilies);

void BM_UvBattery(benchmark::State& state) {
  FiniteSpace X = boolean_spectrum(catalog_algebra("PS4"));
  for (auto _ : state) benchmark::DoNotOptimize(validate_uv(X).ok());
}
BENCHMARK(BM_UvBattery);

}  // namespace

BENCHMARK_MAIN();
