#include <benchmark/benchmark.h>

#include <omp.h>

#include "twistlab/sweep.hpp"

using namespace twistlab;

namespace {

struct Case {
  const char* diagram;
  int max_len;
};

constexpr Case kCases[] = {{"A3", 5}, {"D4", 4}, {"A4", 4}};

void image_serial(benchmark::State& state) {
  const auto& c = kCases[state.range(0)];
  const auto d = parse_diagram(c.diagram);
  for (auto _ : state) benchmark::DoNotOptimize(image_table_serial<Rational>(d, c.max_len));
  state.SetLabel(std::string(c.diagram) + " l<=" + std::to_string(c.max_len));
}

void image_parallel(benchmark::State& state) {
  const auto& c = kCases[state.range(0)];
  const auto d = parse_diagram(c.diagram);
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(image_table<Rational>(d, c.max_len, jobs));
  state.SetLabel(std::string(c.diagram) + " l<=" + std::to_string(c.max_len) + " jobs=" + std::to_string(jobs));
}

void recover_serial(benchmark::State& state) {
  const auto& c = kCases[state.range(0)];
  const auto table = image_table<Rational>(parse_diagram(c.diagram), c.max_len, 0);
  for (auto _ : state) benchmark::DoNotOptimize(recover_all_serial(table.images));
  state.SetLabel(std::string(c.diagram) + " l<=" + std::to_string(c.max_len));
}

void recover_parallel(benchmark::State& state) {
  const auto& c = kCases[state.range(0)];
  const auto table = image_table<Rational>(parse_diagram(c.diagram), c.max_len, 0);
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(recover_all(table.images, jobs));
  state.SetLabel(std::string(c.diagram) + " l<=" + std::to_string(c.max_len) + " jobs=" + std::to_string(jobs));
}

void parallel_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (int c = 0; c < 3; ++c)
    for (int jobs = 1; jobs <= max_threads; jobs *= 2) b->Args({c, jobs});
}

}  // namespace

BENCHMARK(image_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(image_parallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(recover_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(recover_parallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
