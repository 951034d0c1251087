#include <benchmark/benchmark.h>

#include <cstddef>

#include "monoconv/fock.hpp"
#include "monoconv/moments.hpp"
#include "monoconv/partitions.hpp"
#include "monoconv/transforms.hpp"

namespace {

namespace mo = monoconv::moments;
namespace pa = monoconv::partitions;
namespace fo = monoconv::fock;
namespace tr = monoconv::transforms;

void BM_MomentTable(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    mo::MomentTable table(m, n);
    benchmark::DoNotOptimize(table.at(m, n));
  }
}
BENCHMARK(BM_MomentTable)->Args({10, 8})->Args({10, 50})->Args({50, 100});

void BM_CountNc2wmo(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pa::count_nc2wmo(4, n));
}
BENCHMARK(BM_CountNc2wmo)->DenseRange(4, 8, 2);

void BM_MomentViaFock(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fo::moment_via_fock(3, n));
}
BENCHMARK(BM_MomentViaFock)->DenseRange(2, 5);

void BM_DensityNumeric(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tr::density_numeric(m, 1.3));
}
BENCHMARK(BM_DensityNumeric)->Arg(1)->Arg(2)->Arg(10);

void BM_DensityCurve(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tr::density_curve(3, -3.0, 3.0, samples));
}
BENCHMARK(BM_DensityCurve)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
