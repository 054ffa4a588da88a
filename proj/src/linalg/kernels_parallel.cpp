#include "rht/kernels.hpp"

#include <omp.h>

namespace rht::kernels::parallel {

namespace {
constexpr std::ptrdiff_t kMinParallel = 32;
}

void eliminate_column(std::span<SparseVec> rows, const SparseVec& pivot, std::uint32_t col) {
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 8) if (n >= kMinParallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto& r = rows[static_cast<std::size_t>(i)];
    Rational c = sv::get(r, col);
    if (c != 0) r = sv::axpy(r, -c, pivot);
  }
}

void reduce_batch(std::span<SparseVec> vs, const std::vector<SparseVec>& rows,
                  const std::vector<std::int32_t>& pivot_row) {
  const auto n = static_cast<std::ptrdiff_t>(vs.size());
#pragma omp parallel for schedule(dynamic, 4) if (n >= 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto& v = vs[static_cast<std::size_t>(i)];
    v = reduce_one(v, rows, pivot_row);
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace rht::kernels::parallel
