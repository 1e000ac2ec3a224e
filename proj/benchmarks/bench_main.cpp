// Microbenchmarks for the arithmetic kernels that dominate the library's
// runtime: extension-field multiplication, Weil pairings, point-group order
// certification, Kummer-class reduction, Howell normal forms, and the
// obstruction map itself.
#include <benchmark/benchmark.h>

#include <g1b/ec.hpp>
#include <g1b/ff.hpp>
#include <g1b/kummer.hpp>
#include <g1b/obstruction.hpp>
#include <g1b/valuation.hpp>

#include <random>
#include <vector>

using namespace g1b;

namespace {

LevelStructure level3_structure() {
  Field F = Field::make(7, 1);
  Curve E = Curve::make(F, F.from_int(0), F.from_int(2));
  return symplectify(level_structure(E, 3));
}

void BM_FieldMul(benchmark::State& state) {
  Field F = Field::make(7, static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(42);
  std::vector<FieldElem> elems;
  for (int i = 0; i < 64; ++i) {
    std::vector<u64> c(F.degree());
    for (auto& x : c) x = rng() % 7;
    c[0] = 1 + c[0] % 6;  // keep nonzero
    elems.push_back(F.from_coeffs(c));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elems[i % 64] * elems[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(3)->Arg(6)->Arg(12);

void BM_Frobenius(benchmark::State& state) {
  Field F = Field::make(29, 7);
  std::vector<u64> c(7);
  for (size_t i = 0; i < 7; ++i) c[i] = (i * i + 3) % 29;
  FieldElem e = F.from_coeffs(c);
  for (auto _ : state) benchmark::DoNotOptimize(e.frobenius(1));
}
BENCHMARK(BM_Frobenius);

void BM_WeilPairing(benchmark::State& state) {
  u64 n = static_cast<u64>(state.range(0));
  std::vector<FullLevelCurve> found = full_level_search(n, 3, 200, 1);
  Field F = Field::make(found[0].p, 1);
  Curve E = Curve::make(F, F.from_int(found[0].a4), F.from_int(found[0].a6));
  TorsionBasis b = torsion_basis(E, n);
  for (auto _ : state) benchmark::DoNotOptimize(weil_pairing(E, b.T, b.S, n));
}
BENCHMARK(BM_WeilPairing)->Arg(3)->Arg(5)->Arg(7);

void BM_GroupOrderBSGS(benchmark::State& state) {
  Field F = Field::make(1000003, 1);
  Curve E = Curve::make(F, F.from_int(1), F.from_int(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(group_order(E, OrderMethod::BabyStepGiantStep));
}
BENCHMARK(BM_GroupOrderBSGS);

void BM_KummerReduce(benchmark::State& state) {
  TameContext ctx = TameContext::make(29, 7);
  Field R = ctx.residue_field();
  std::vector<FieldElem> units;
  for (u64 u = 1; u <= 64; ++u) units.push_back(R.from_int(u % 28 + 1));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        KummerClass::make(ctx, static_cast<i64>(i) - 32, units[i % 64]));
    ++i;
  }
}
BENCHMARK(BM_KummerReduce);

void BM_HowellForm(benchmark::State& state) {
  u64 m = static_cast<u64>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<std::vector<Vec>> gensets;
  for (int t = 0; t < 32; ++t) {
    std::vector<Vec> gens;
    for (int g = 0; g < 3; ++g) {
      Vec v(4);
      for (auto& x : v) x = rng() % m;
      gens.push_back(v);
    }
    gensets.push_back(gens);
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Subgroup::make(m, 4, gensets[i % 32]));
    ++i;
  }
}
BENCHMARK(BM_HowellForm)->Arg(4)->Arg(9)->Arg(12);

void BM_Delta(benchmark::State& state) {
  LevelStructure ls = level3_structure();
  TameContext ctx = TameContext::make(7, 3);
  std::vector<CocycleClass> cls = CocycleClass::enumerate(ctx);
  DeltaPolicy policy = DeltaPolicy::odd_n();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_t(cls[i % cls.size()], ls, policy));
    ++i;
  }
}
BENCHMARK(BM_Delta);

void BM_LevelSearch(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(full_level_search(3, 5, 100, 1, 1));
}
BENCHMARK(BM_LevelSearch);

}  // namespace

BENCHMARK_MAIN();
