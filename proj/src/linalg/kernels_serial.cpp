#include "rht/kernels.hpp"

#include <map>

namespace rht::kernels {

SparseVec reduce_one(const SparseVec& v, const std::vector<SparseVec>& rows,
                     const std::vector<std::int32_t>& pivot_row) {
  bool hit = false;
  for (const auto& [i, c] : v)
    if (i < pivot_row.size() && pivot_row[i] >= 0) {
      hit = true;
      break;
    }
  if (!hit) return v;
  std::map<std::uint32_t, Rational> acc;
  for (const auto& [i, c] : v) acc[i] += c;
  for (const auto& [i, c] : v) {
    if (i >= pivot_row.size() || pivot_row[i] < 0) continue;
    for (const auto& [j, x] : rows[static_cast<std::size_t>(pivot_row[i])]) acc[j] -= c * x;
  }
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [j, x] : acc)
    if (x != 0) out.emplace_back(j, std::move(x));
  return out;
}

namespace serial {

void eliminate_column(std::span<SparseVec> rows, const SparseVec& pivot, std::uint32_t col) {
  for (auto& r : rows) {
    Rational c = sv::get(r, col);
    if (c != 0) r = sv::axpy(r, -c, pivot);
  }
}

void reduce_batch(std::span<SparseVec> vs, const std::vector<SparseVec>& rows,
                  const std::vector<std::int32_t>& pivot_row) {
  for (auto& v : vs) v = reduce_one(v, rows, pivot_row);
}

}  // namespace serial
}  // namespace rht::kernels
