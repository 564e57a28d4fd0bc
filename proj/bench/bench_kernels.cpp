// Serial reference against the OpenMP variant of each data-parallel kernel.

#include <benchmark/benchmark.h>

#include <random>

#include "wreath/groups/finite_group.hpp"
#include "wreath/kernels/kernels.hpp"

using namespace wreath;

namespace {

std::vector<std::uint32_t> random_table(std::size_t n, std::uint32_t order) {
  std::mt19937 rng(1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v)
    x = std::uniform_int_distribution<std::uint32_t>(0, order - 1)(rng);
  return v;
}

void eval_table_step(benchmark::State& state, kernels::Mode mode) {
  const auto s3 = FiniteGroup::symmetric3();
  std::size_t size = 1;
  for (int i = 0; i < state.range(0); ++i)
    size *= 6;
  const auto in = random_table(size, 6);
  std::vector<std::uint32_t> out(size);
  for (auto _ : state) {
    kernels::eval_table_step(mode, s3, in, out, size / 6);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * size));
}

void expand(benchmark::State& state, kernels::Mode mode) {
  std::vector<std::uint64_t> items(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < items.size(); ++i)
    items[i] = i * 0x9e3779b97f4a7c15ull;
  std::vector<std::uint64_t> out;
  auto fn = [](std::uint64_t v, std::size_t j) {
    for (int r = 0; r < 16; ++r)
      v = (v ^ (v >> 31)) * 0xbf58476d1ce4e5b9ull + j;
    return v;
  };
  for (auto _ : state) {
    kernels::expand(mode, std::span<const std::uint64_t>(items), 8, out, fn);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * items.size() * 8));
}

} // namespace

BENCHMARK_CAPTURE(eval_table_step, serial, kernels::Mode::Serial)->DenseRange(6, 9);
BENCHMARK_CAPTURE(eval_table_step, parallel, kernels::Mode::Parallel)->DenseRange(6, 9);
BENCHMARK_CAPTURE(expand, serial, kernels::Mode::Serial)->Range(1 << 10, 1 << 18);
BENCHMARK_CAPTURE(expand, parallel, kernels::Mode::Parallel)->Range(1 << 10, 1 << 18);

BENCHMARK_MAIN();
