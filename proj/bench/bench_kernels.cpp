// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "qtoric/mirror.hpp"
#include "qtoric/parallel.hpp"

namespace qt = qtoric;

namespace {

qt::Execution mode(const benchmark::State& s) {
  return s.range(0) ? qt::Execution::parallel : qt::Execution::serial;
}

const qt::ToricModel& local_p2() {
  static const qt::ToricModel m = qt::build_model(qt::fans::local_p2(), qt::Chart::sliced);
  return m;
}

void BM_ifun_fill(benchmark::State& s) {
  for (auto _ : s)
    benchmark::DoNotOptimize(qt::ifun_series(local_p2(), 5, mode(s)));
}

void BM_shift_apply(benchmark::State& s) {
  const auto& model = local_p2();
  static const auto I = qt::ifun_series(model, 5);
  static const auto op = qt::make_shift(model, qt::unit_cocharacter(model.m(), 3));
  for (auto _ : s)
    benchmark::DoNotOptimize(qt::shift_apply(model, op, I, mode(s)));
}

void BM_birkhoff(benchmark::State& s) {
  static const qt::Cohomology coh(qt::build_model(qt::fans::hirzebruch(1), qt::Chart::sliced));
  static const auto degrees = qt::model_degrees(coh.model(), 5);
  static const auto L = qt::derivative_frame(coh, qt::ifun_series_over(coh.model(), degrees, 5));
  for (auto _ : s)
    benchmark::DoNotOptimize(qt::birkhoff_factorize(coh, L, degrees, mode(s)));
}

void BM_sum_of_products(benchmark::State& s) {
  // the U_a P_b convolution of one degree, as in the factorization check
  static const qt::Cohomology coh(qt::build_model(qt::fans::projective_space(2), qt::Chart::sliced));
  static const auto degrees = qt::model_degrees(coh.model(), 3);
  static const auto L = qt::derivative_frame(coh, qt::ifun_series_over(coh.model(), degrees, 3));
  static const auto F = qt::birkhoff_factorize(coh, L, degrees);
  qt::MatrixPairs pairs;
  for (const auto& [d, a] : F.U.terms())
    for (const auto& [e, b] : F.P.terms())
      pairs.emplace_back(&a, &b);
  const std::size_t n = coh.basis().size();
  for (auto _ : s)
    benchmark::DoNotOptimize(qt::sum_of_products(pairs, n, n, coh.model().nvars(), mode(s)));
}

} // namespace

BENCHMARK(BM_ifun_fill)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shift_apply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_birkhoff)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sum_of_products)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
