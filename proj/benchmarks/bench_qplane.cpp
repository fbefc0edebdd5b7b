#include <benchmark/benchmark.h>

#include "qplane/expr.hpp"
#include "qplane/hesse_curve.hpp"
#include "qplane/order_engine.hpp"
#include "qplane/table1.hpp"

using namespace qplane;

namespace {

const DeclaredField& zeta6() {
  static const DeclaredField f = declare_field("u", "u^2 - u + 1");
  return f;
}

void BM_ClassifyNodalCubic(benchmark::State& state) {
  const TernaryForm g = parse_form("x^3 - 7/2*x*y*z + y^3");
  for (auto _ : state) benchmark::DoNotOptimize(classify_cubic(g));
}
BENCHMARK(BM_ClassifyNodalCubic)->Unit(benchmark::kMillisecond);

void BM_ClassifySmoothHesse(benchmark::State& state) {
  const TernaryForm g = parse_form("x^3 + y^3 + z^3 - 2*x*y*z");
  for (auto _ : state) benchmark::DoNotOptimize(classify_cubic(g));
}
BENCHMARK(BM_ClassifySmoothHesse)->Unit(benchmark::kMillisecond);

void BM_PointScheme(benchmark::State& state) {
  const QuadraticAlgebra a = table1(Table1Row::S1, {zeta6().generator_value, {}});
  for (auto _ : state) benchmark::DoNotOptimize(point_scheme(a));
}
BENCHMARK(BM_PointScheme)->Unit(benchmark::kMicrosecond);

void BM_SigmaNormS1(benchmark::State& state) {
  const SigmaSystem s = SigmaSystem::from_algebra(table1(Table1Row::S1, {zeta6().generator_value, {}}));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_norm(s));
}
BENCHMARK(BM_SigmaNormS1)->Unit(benchmark::kMillisecond);

void BM_SigmaOrderT1(benchmark::State& state) {
  const SigmaSystem s = SigmaSystem::from_algebra(table1(Table1Row::T1));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_order(s));
}
BENCHMARK(BM_SigmaOrderT1)->Unit(benchmark::kMillisecond);

void BM_EcAddRational(benchmark::State& state) {
  const CurvePtr c = HesseCurve::create(Scalar(0));
  const HessePoint p(c, ProjPoint(Scalar(0), Scalar(1), Scalar(-1)));
  const HessePoint q(c, ProjPoint(Scalar(-1), Scalar(0), Scalar(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ec_add(p, q));
}
BENCHMARK(BM_EcAddRational)->Unit(benchmark::kMicrosecond);

void BM_PointOrderCap(benchmark::State& state) {
  // (1, 2, 1) lies on lambda = 5.
  const CurvePtr c = HesseCurve::create(Scalar(5));
  const HessePoint p(c, ProjPoint(Scalar(1), Scalar(2), Scalar(1)));
  for (auto _ : state) benchmark::DoNotOptimize(point_order(p, state.range(0)));
}
BENCHMARK(BM_PointOrderCap)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_ThreeTorsion(benchmark::State& state) {
  const CurvePtr c = HesseCurve::create(Scalar(1));
  for (auto _ : state) benchmark::DoNotOptimize(three_torsion(c));
}
BENCHMARK(BM_ThreeTorsion)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
