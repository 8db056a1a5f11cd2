#include <benchmark/benchmark.h>

#include <random>

#include "coopx/balance.hpp"
#include "coopx/coalition.hpp"
#include "coopx/degree.hpp"
#include "coopx/examples.hpp"
#include "coopx/frac_core.hpp"
#include "coopx/hopf.hpp"
#include "coopx/induce.hpp"
#include "coopx/linear.hpp"
#include "coopx/tu.hpp"

using namespace coopx;

namespace {

// Random bounded LP: box constraints plus dense cuts.
void BM_Maximize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  LinearSystem sys(n);
  for (std::size_t i = 0; i < n; ++i) {
    sys.add_le(unit_vector(n, i), Rational(10));
    sys.add_ge(unit_vector(n, i), Rational(-10));
  }
  for (std::size_t k = 0; k < 2 * n; ++k) {
    Vector a(n);
    for (auto& x : a) x = static_cast<long>(rng() % 7) - 3;
    sys.add_le(a, Rational(static_cast<long>(rng() % 20)));
  }
  Vector c(n);
  for (auto& x : c) x = static_cast<long>(rng() % 5) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(maximize(c, sys));
}
BENCHMARK(BM_Maximize)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateBalancedSets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FirmSystem fs;
  for (Mask s : canonical_subsets(n)) {
    Vector v(n);
    for (int i : members(s)) v[i] = 1;
    fs.firms.push_back(v);
  }
  fs.resource = Vector(n, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_balanced_sets(fs, BalanceMode::Cone));
}
BENCHMARK(BM_EnumerateBalancedSets)->Arg(3)->Arg(4);

void BM_TuBalanced(benchmark::State& state) {
  const auto method = static_cast<TuBalanceMethod>(state.range(0));
  std::mt19937 rng(2);
  TUGame g(5);
  for (Mask s = 1; s <= full_mask(5); ++s) g.value(s) = static_cast<long>(rng() % 41) - 20;
  minimal_balanced_families(5);  // fill the cache outside the timed loop
  for (auto _ : state) benchmark::DoNotOptimize(is_balanced_tu(g, method));
}
BENCHMARK(BM_TuBalanced)
    ->Arg(static_cast<int>(TuBalanceMethod::Enumerate))
    ->Arg(static_cast<int>(TuBalanceMethod::DualProgram));

void BM_FractionalCoreExample2(benchmark::State& state) {
  const GeneralizedGame g = example2();
  for (auto _ : state) benchmark::DoNotOptimize(fractional_core_solve(g));
}
BENCHMARK(BM_FractionalCoreExample2)->Unit(benchmark::kMillisecond);

void BM_FractionalCoreModifiedExample1(benchmark::State& state) {
  const GeneralizedGame g = embed_coalitional(example1_modified());
  for (auto _ : state) benchmark::DoNotOptimize(fractional_core_solve(g));
}
BENCHMARK(BM_FractionalCoreModifiedExample1)->Unit(benchmark::kMillisecond);

void BM_SpernerDegree(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  std::vector<Vector> pts;
  for (int i = 0; i < 4; ++i) pts.push_back(unit_vector(4, i));
  const Triangulation t = barycentric_subdivision(simplex_boundary(pts), depth);
  FirmSystem fs;
  for (int i = 0; i < 4; ++i) fs.firms.push_back(unit_vector(4, i));
  fs.resource = Vector(4, make_rational(1, 4));
  Labeling l;
  for (const auto& c : t.carriers) l.push_back(Mask{1} << c.front());
  for (auto _ : state) benchmark::DoNotOptimize(pl_degree(t.complex, l, fs));
  state.counters["facets"] = static_cast<double>(t.complex.facets().size());
}
BENCHMARK(BM_SpernerDegree)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_HopfInvariant(benchmark::State& state) {
  const HopfAsset& a = hopf_asset();
  for (auto _ : state) benchmark::DoNotOptimize(hopf_invariant(a.complex, a.colors));
}
BENCHMARK(BM_HopfInvariant)->Unit(benchmark::kMillisecond);

void BM_HopfFractionalCore(benchmark::State& state) {
  const HopfAsset& a = hopf_asset();
  const GeneralizedGame g = hopf_game(a);
  const InducedCover cover = induce_labeling(g, hopf_region(a), 0);
  SolveOptions o;
  o.probes = cover_probes(g, cover);
  for (auto _ : state) benchmark::DoNotOptimize(fractional_core_solve(g, o));
}
BENCHMARK(BM_HopfFractionalCore)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
