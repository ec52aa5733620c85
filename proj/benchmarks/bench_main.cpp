#include <benchmark/benchmark.h>

#include "dacox/autoaction.hpp"
#include "dacox/congruence.hpp"
#include "dacox/presentation.hpp"

using namespace dacox;

namespace {

void BM_DaweylMul(benchmark::State& st) {
  DoubleAffineWeyl G(build_root_system(parse_affine_type("E6^(1)")));
  std::mt19937_64 rng(1);
  std::vector<DaweylElement> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(G.random(rng));
  std::size_t k = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(G.mul(xs[k % 64], xs[(k + 7) % 64]));
    ++k;
  }
}
BENCHMARK(BM_DaweylMul);

void BM_VerifyPresentation(benchmark::State& st) {
  const Family fams[] = {Family::dddotC, Family::dddotE, Family::ddotF4};
  const int ranks[] = {3, 6, 4};
  const auto l = make_label(fams[st.range(0)], ranks[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(verify_presentation(l).ok());
  st.SetLabel(to_string(l));
}
BENCHMARK(BM_VerifyPresentation)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_AutomorphismSuite(benchmark::State& st) {
  const auto l = make_label(st.range(0) == 0 ? Family::dddotD : Family::ddotF4, 4);
  for (auto _ : st) benchmark::DoNotOptimize(automorphism_suite(l).ok());
  st.SetLabel(to_string(l));
}
BENCHMARK(BM_AutomorphismSuite)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& st) {
  const int r = static_cast<int>(st.range(0));
  std::mt19937_64 rng(5);
  std::vector<Mat2> ms;
  for (int i = 0; i < 64; ++i) ms.push_back(random_gamma1(rng, r, 24));
  std::size_t k = 0;
  for (auto _ : st) benchmark::DoNotOptimize(decompose(ms[k++ % 64], r));
}
BENCHMARK(BM_Decompose)->DenseRange(1, 3);

void BM_CosetTable(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(coset_table(static_cast<int>(st.range(0))).index());
}
BENCHMARK(BM_CosetTable)->Arg(3)->Arg(7);

}  // namespace
BENCHMARK_MAIN();
