#include "wreath/kernels/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wreath::kernels {

void eval_table_step_serial(const FiniteGroup& h, std::span<const std::uint32_t> in,
                            std::span<std::uint32_t> out, std::size_t stride) {
  const std::size_t n = h.order();
  for (std::size_t i = 0; i < in.size(); ++i)
    out[i] = h.mul(in[i], static_cast<std::uint32_t>((i / stride) % n));
}

void eval_table_step_parallel(const FiniteGroup& h, std::span<const std::uint32_t> in,
                              std::span<std::uint32_t> out, std::size_t stride) {
  if (in.size() < kParallelThreshold) {
    eval_table_step_serial(h, in, out, stride);
    return;
  }
  const std::size_t n = h.order();
  const std::int64_t size = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < size; ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    out[i] = h.mul(in[i], static_cast<std::uint32_t>((i / stride) % n));
  }
}

void eval_table_step(Mode mode, const FiniteGroup& h, std::span<const std::uint32_t> in,
                     std::span<std::uint32_t> out, std::size_t stride) {
  if (mode == Mode::Parallel)
    eval_table_step_parallel(h, in, out, stride);
  else
    eval_table_step_serial(h, in, out, stride);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace wreath::kernels
