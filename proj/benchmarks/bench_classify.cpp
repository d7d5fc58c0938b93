#include <benchmark/benchmark.h>

#include <array>

#include "plumbtight/fullpath.hpp"
#include "plumbtight/oracle.hpp"
#include "plumbtight/slopes.hpp"

namespace pt = plumbtight;

namespace {

const std::array<const char*, 4> kInputs{"-1;1/2,1/2,1/2", "-1;2/3,1/2,1/3", "-1;3/4,2/3,1/5", "-1;5/6,4/5,1/6"};

void bm_classify(benchmark::State& state) {
  const pt::Manifold m(pt::SeifertData::parse(kInputs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(pt::classify(m));
  state.SetLabel(kInputs[state.range(0)]);
}
BENCHMARK(bm_classify)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void bm_oracle(benchmark::State& state) {
  const auto dual = pt::build_gamma_dual(pt::SeifertData::parse(kInputs[state.range(0)]));
  pt::OracleOptions o;
  o.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pt::osz_good_vectors(dual, o));
  state.SetLabel(kInputs[state.range(0)]);
}
BENCHMARK(bm_oracle)->ArgsProduct({{0, 1, 2, 3}, {1, 4}})->Unit(benchmark::kMillisecond);

void bm_isotopy_closure(benchmark::State& state) {
  const auto gamma = pt::build_gamma(pt::SeifertData::parse(kInputs[state.range(0)]));
  const auto ps = pt::enumerate_presentations(gamma);
  for (auto _ : state) benchmark::DoNotOptimize(pt::isotopy_closure(ps, gamma));
}
BENCHMARK(bm_isotopy_closure)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
