#include <benchmark/benchmark.h>

#include "orbiseif/engine.hpp"
#include "orbiseif/oracle.hpp"

using namespace orbiseif;

namespace {

const FamilySpec kAbelian{FamilyId::F1, 3, 5, 8, 3};
const FamilySpec kDihedral{FamilyId::F11, 2, 3, 10, 3};
const FamilySpec kPolyhedral{FamilyId::F9, 3, 1, 1, 1};

void BM_RationalArithmetic(benchmark::State& state) {
  Rational acc(0);
  for (auto _ : state) {
    for (int k = 1; k <= 64; ++k) acc = (acc + Rational(k, 240)).frac();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RationalArithmetic);

void BM_BinaryIcosahedralClosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(standard_group(StandardGroupId::icosahedral()));
}
BENCHMARK(BM_BinaryIcosahedralClosure);

void BM_GoursatGroup(benchmark::State& state, FamilySpec spec) {
  for (auto _ : state) benchmark::DoNotOptimize(goursat_group(spec));
}
BENCHMARK_CAPTURE(BM_GoursatGroup, abelian, kAbelian);
BENCHMARK_CAPTURE(BM_GoursatGroup, polyhedral, kPolyhedral);

void BM_Engine(benchmark::State& state, FamilySpec spec) {
  for (auto _ : state) benchmark::DoNotOptimize(engine_report(spec));
}
BENCHMARK_CAPTURE(BM_Engine, abelian, kAbelian);
BENCHMARK_CAPTURE(BM_Engine, dihedral, kDihedral);
BENCHMARK_CAPTURE(BM_Engine, polyhedral, kPolyhedral);

void BM_Oracle(benchmark::State& state, FamilySpec spec) {
  const PairGroup g = goursat_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_report(g));
}
BENCHMARK_CAPTURE(BM_Oracle, abelian, kAbelian);
BENCHMARK_CAPTURE(BM_Oracle, dihedral, kDihedral);
BENCHMARK_CAPTURE(BM_Oracle, polyhedral, kPolyhedral);

void BM_TorusLocalInvariant(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::vector<TorusAction> h;
  for (std::int64_t k = 0; k < n; ++k) h.push_back({Rational(k, n), Rational(3 * k, n)});
  for (auto _ : state) benchmark::DoNotOptimize(torus_local_invariant(h));
}
BENCHMARK(BM_TorusLocalInvariant)->Arg(8)->Arg(64)->Arg(240);

}  // namespace

BENCHMARK_MAIN();
