#include <benchmark/benchmark.h>

#include "cygoppa/cyclic.hpp"
#include "cygoppa/goppa.hpp"
#include "cygoppa/harness.hpp"

using namespace cygoppa;

namespace {

SpectralData order21_instance() {
  const FieldSpec& f = FieldSpec::get(6);
  const FieldElement rho = f.generator_pow(3);
  return spectral(MoebiusMap::normalized(rho, f.zero(), f.one(), rho.inv(), 0),
                  TowerEmbedding::quadratic(6));
}

std::vector<FieldElement> affine_support(const SpectralData& sd) {
  const FieldSpec& w = *sd.working_field;
  std::vector<bool> seen(w.size(), false);
  seen[sd.fixed1.mask()] = true;
  seen[sd.fixed2.mask()] = true;
  for (std::uint32_t mask = 0; mask < w.size(); ++mask) {
    if (seen[mask]) continue;
    const Orbit o = orbit_of(sd.map_w, ProjPoint::finite(w.element(mask)));
    for (const ProjPoint& p : o.points())
      if (!p.is_infinity()) seen[p.value().mask()] = true;
    if (!o.contains_infinity()) return o.affine_points();
  }
  return {};
}

void BM_FieldMul(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::get(static_cast<unsigned>(state.range(0)));
  std::uint32_t x = 3, y = f.generator_mask();
  for (auto _ : state) {
    x = f.mul_raw(x | 1, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16);

void BM_PolyMul(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::get(8);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(state.range(0)), 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint32_t>(i * 37 % 256);
  c.back() = 1;
  const Polynomial p(f, std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(64);

void BM_SpectralAnalysis(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::get(6);
  const FieldElement rho = f.generator_pow(3);
  const MoebiusMap m = MoebiusMap::normalized(rho, f.zero(), f.one(), rho.inv(), 0);
  const TowerEmbedding& tw = TowerEmbedding::quadratic(6);
  for (auto _ : state) benchmark::DoNotOptimize(spectral(m, tw));
}
BENCHMARK(BM_SpectralAnalysis);

void BM_BuildCode21(benchmark::State& state) {
  const SpectralData sd = order21_instance();
  const std::vector<FieldElement> L = affine_support(sd);
  const Polynomial g = admissible_poly(sd, 1, 0).g;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_code(GoppaInstance::make(L, g, Variant::expurgated)));
  }
}
BENCHMARK(BM_BuildCode21);

void BM_ExtractGenerator(benchmark::State& state) {
  const SpectralData sd = order21_instance();
  const BinaryCode code = build_code(
      GoppaInstance::make(affine_support(sd), admissible_poly(sd, 1, 0).g,
                          Variant::expurgated));
  for (auto _ : state) benchmark::DoNotOptimize(extract_generator(code));
}
BENCHMARK(BM_ExtractGenerator);

void BM_MinDistance21_14(benchmark::State& state) {
  const SpectralData sd = order21_instance();
  const BinaryCode code = build_code(
      GoppaInstance::make(affine_support(sd), admissible_poly(sd, 1, 0).g,
                          Variant::expurgated));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(code));
}
BENCHMARK(BM_MinDistance21_14);

void BM_PartitionLine(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::get(static_cast<unsigned>(state.range(0)));
  const FieldElement rho = f.generator_pow(3);
  const MoebiusMap m = MoebiusMap::normalized(rho, f.zero(), f.one(), rho.inv(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(partition(m));
}
BENCHMARK(BM_PartitionLine)->Arg(6)->Arg(8);

void BM_RunCase(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::get(6);
  const FieldElement rho = f.generator_pow(3);
  CaseSpec cs;
  cs.base_field = &f;
  cs.matrix = {rho.mask(), 0, 1, rho.inv().mask()};
  cs.variant = Variant::extended;
  cs.support = SupportKind::orbit_infinity;
  cs.compute_distance = false;
  for (auto _ : state) benchmark::DoNotOptimize(run_case(cs));
}
BENCHMARK(BM_RunCase);

}  // namespace

BENCHMARK_MAIN();
