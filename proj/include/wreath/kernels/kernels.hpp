#ifndef WREATH_KERNELS_KERNELS_HPP
#define WREATH_KERNELS_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wreath/groups/finite_group.hpp"

// Data-parallel inner loops. Every kernel has a serial reference with the
// same signature; the OpenMP variant writes to disjoint output slots so the
// result is identical element for element.

namespace wreath::kernels {

enum class Mode { Serial, Parallel };

/// Below this many items the parallel variants fall back to the serial loop.
inline constexpr std::size_t kParallelThreshold = 4096;

/// One step of the simultaneous evaluation of a word under every assignment
/// X -> H: out[i] = in[i] * digit(i), where digit(i) = (i / stride) % |H| is
/// the value the i-th assignment gives the letter being appended.
void eval_table_step_serial(const FiniteGroup& h, std::span<const std::uint32_t> in,
                            std::span<std::uint32_t> out, std::size_t stride);
void eval_table_step_parallel(const FiniteGroup& h, std::span<const std::uint32_t> in,
                              std::span<std::uint32_t> out, std::size_t stride);
void eval_table_step(Mode mode, const FiniteGroup& h, std::span<const std::uint32_t> in,
                     std::span<std::uint32_t> out, std::size_t stride);

/// out[i * fanout + j] = fn(items[i], j).
template <class Item, class Out, class Fn>
void expand_serial(std::span<const Item> items, std::size_t fanout, std::vector<Out>& out, Fn&& fn) {
  out.resize(items.size() * fanout);
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < fanout; ++j)
      out[i * fanout + j] = fn(items[i], j);
}

template <class Item, class Out, class Fn>
void expand_parallel(std::span<const Item> items, std::size_t fanout, std::vector<Out>& out,
                     Fn&& fn) {
  const std::size_t total = items.size() * fanout;
  out.resize(total);
  if (total < kParallelThreshold / 16) {
    expand_serial(items, fanout, out, fn);
    return;
  }
  const std::int64_t n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / fanout;
    const std::size_t j = static_cast<std::size_t>(k) % fanout;
    out[static_cast<std::size_t>(k)] = fn(items[i], j);
  }
}

template <class Item, class Out, class Fn>
void expand(Mode mode, std::span<const Item> items, std::size_t fanout, std::vector<Out>& out,
            Fn&& fn) {
  if (mode == Mode::Parallel)
    expand_parallel(items, fanout, out, fn);
  else
    expand_serial(items, fanout, out, fn);
}

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

} // namespace wreath::kernels

#endif
