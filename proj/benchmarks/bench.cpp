#include <benchmark/benchmark.h>

#include "qtw/scalars.hpp"

namespace {

void BM_cyc_mul(benchmark::State& state) {
  const unsigned l = static_cast<unsigned>(state.range(0));
  qtw::Cyc a = qtw::q_int(l, 2) * qtw::Cyc::from_mpq(l, mpq_class(3, 7));
  qtw::Cyc b = qtw::q_int(l, static_cast<long>(l - 1));
  for (auto _ : state) {
    qtw::Cyc c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_cyc_mul)->Arg(3)->Arg(5);

void BM_cyc_q_shift(benchmark::State& state) {
  const unsigned l = static_cast<unsigned>(state.range(0));
  qtw::Cyc a = qtw::q_int(l, 2) + qtw::Cyc::from_long(l, 5);
  for (auto _ : state) {
    a.mul_q_pow(2);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_cyc_q_shift)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
