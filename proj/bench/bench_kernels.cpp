// Serial reference kernels against their OpenMP counterparts.
// Cap the worker count with BARDINA_THREADS.

#include <benchmark/benchmark.h>

#include <complex>
#include <cstdlib>
#include <vector>

#include "bardina/kernels.hpp"
#include "bardina/random_fields.hpp"

namespace sk = bardina::kernels::serial;
namespace pk = bardina::kernels::parallel;

namespace {

std::vector<double> sample(std::size_t count, std::uint64_t stream) {
  const bardina::CounterRng rng(5);
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = rng.normal(stream, i);
  return v;
}

template <bool Parallel>
void convolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::size_t points = static_cast<std::size_t>(n) * n * n;
  const auto w = sample(points, 0);
  const auto s = sample(points, 1);
  std::vector<double> out(points);
  for (auto _ : state) {
    if constexpr (Parallel) {
      pk::convolve_periodic(n, w, s, 1.0, out);
    } else {
      sk::convolve_periodic(n, w, s, 1.0, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points * points));
}

template <bool Parallel>
void reduce_l2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto v = sample(static_cast<std::size_t>(n) * n * n, 2);
  for (auto _ : state) {
    double r = Parallel ? pk::sum_abs_pow(v, 2, n) : sk::sum_abs_pow(v, 2);
    benchmark::DoNotOptimize(r);
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(v.size() * sizeof(double)));
}

template <bool Parallel>
void scale(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::size_t modes = static_cast<std::size_t>(n) * n * (n / 2 + 1);
  const auto re = sample(modes, 3);
  std::vector<std::complex<double>> c(modes);
  for (std::size_t i = 0; i < modes; ++i) c[i] = {re[i], -re[i]};
  const auto symbol = sample(modes, 4);
  for (auto _ : state) {
    if constexpr (Parallel) {
      pk::scale_modes(c, symbol);
    } else {
      sk::scale_modes(c, symbol);
    }
    benchmark::DoNotOptimize(c.data());
  }
}

}  // namespace

BENCHMARK(convolve<false>)->Name("convolve/serial")->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(convolve<true>)->Name("convolve/parallel")->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(reduce_l2<false>)->Name("sum_sq/serial")->Arg(32)->Arg(64);
BENCHMARK(reduce_l2<true>)->Name("sum_sq/parallel")->Arg(32)->Arg(64);
BENCHMARK(scale<false>)->Name("scale_modes/serial")->Arg(32)->Arg(64);
BENCHMARK(scale<true>)->Name("scale_modes/parallel")->Arg(32)->Arg(64);

int main(int argc, char** argv) {
  if (const char* env = std::getenv("BARDINA_THREADS")) bardina::kernels::set_thread_cap(std::atoi(env));
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
