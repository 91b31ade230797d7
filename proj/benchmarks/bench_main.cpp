#include <benchmark/benchmark.h>

#include "bvkit/barcobar.hpp"
#include "bvkit/charmap.hpp"
#include "bvkit/cohomology.hpp"
#include "bvkit/fixtures.hpp"
#include "bvkit/hochschild.hpp"
#include "bvkit/schouten.hpp"

using namespace bvkit;
namespace fx = bvkit::fixtures;
namespace hh = bvkit::hochschild;

namespace {

hopf::FrobeniusData symmetric_frobenius(const hopf::FinAlgebraData& a) {
  return hopf::frobenius_from_form(a, *hopf::analyze_symmetry(a).symmetric_form);
}

void BM_HochschildCohomology(benchmark::State& state, const char* name) {
  auto a = fx::builtin(name).data;
  int top = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = hh::hochschild_complex(a, hh::regular_bimodule(a), top, hh::Variant::cochain);
    benchmark::DoNotOptimize(c.homology());
  }
}
BENCHMARK_CAPTURE(BM_HochschildCohomology, exterior_x, "exterior_x")->DenseRange(2, 5);
BENCHMARK_CAPTURE(BM_HochschildCohomology, sweedler_h4, "sweedler_h4")->DenseRange(1, 3);
BENCHMARK_CAPTURE(BM_HochschildCohomology, group_s3, "group_s3")->DenseRange(1, 2);

void BM_RankOfDifferential(benchmark::State& state) {
  auto a = fx::sweedler(Field::rationals());
  auto c = hh::hochschild_complex(a, hh::regular_bimodule(a), static_cast<int>(state.range(0)), hh::Variant::cochain);
  for (auto _ : state) benchmark::DoNotOptimize(rank(c.d.back()));
}
BENCHMARK(BM_RankOfDifferential)->DenseRange(1, 3);

void BM_OperadAxioms(benchmark::State& state) {
  auto a = fx::sweedler(Field::rationals());
  hh::EndOperad op(a, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(operad::check_operad_axioms(op));
}
BENCHMARK(BM_OperadAxioms)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BvTable(benchmark::State& state) {
  auto a = fx::exterior_x(Field::rationals());
  auto frob = symmetric_frobenius(a);
  for (auto _ : state) benchmark::DoNotOptimize(hh::hh_bv_table(a, frob, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BvTable)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_HcLambda(benchmark::State& state) {
  auto a = fx::group_algebra(Field::rationals(), fx::cyclic_group(3));
  auto frob = symmetric_frobenius(a);
  for (auto _ : state) benchmark::DoNotOptimize(hh::hc_lambda(a, frob, static_cast<int>(state.range(0)), 20));
}
BENCHMARK(BM_HcLambda)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_HopfCyclic(benchmark::State& state) {
  auto h = fx::sweedler(Field::rationals());
  hopf::ModularPair mp{h.eps(), h.basis(1), hopf::Convention::khalkhali_rangipour};
  for (auto _ : state) benchmark::DoNotOptimize(barcobar::hopf_cyclic(h, mp, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HopfCyclic)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CharacteristicMap(benchmark::State& state) {
  auto h = fx::group_algebra(Field::rationals(), fx::cyclic_group(2));
  auto act = charmap::regular_coaction(h);
  auto tr = charmap::integral_trace(h, h.unit);
  for (auto _ : state)
    benchmark::DoNotOptimize(charmap::characteristic_map(h, h, act, tr, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CharacteristicMap)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_FreeBv(benchmark::State& state) {
  auto l = schouten::lie_builtin("sl2", Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(schouten::check_free_bv(l, 3));
}
BENCHMARK(BM_FreeBv)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
