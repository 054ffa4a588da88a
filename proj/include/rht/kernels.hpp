#pragma once

// Inner loops of exact elimination. The serial versions are the reference;
// the OpenMP versions must produce identical results.

#include "rht/linalg.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rht::kernels {

// v − Σ_p v[p]·row(p) over the pivots p present in v. pivot_row maps a column
// to its row index or −1.
SparseVec reduce_one(const SparseVec& v, const std::vector<SparseVec>& rows,
                     const std::vector<std::int32_t>& pivot_row);

namespace serial {
// rows[i] ← rows[i] − rows[i][col]·pivot for every i.
void eliminate_column(std::span<SparseVec> rows, const SparseVec& pivot, std::uint32_t col);
void reduce_batch(std::span<SparseVec> vs, const std::vector<SparseVec>& rows,
                  const std::vector<std::int32_t>& pivot_row);
}  // namespace serial

namespace parallel {
void eliminate_column(std::span<SparseVec> rows, const SparseVec& pivot, std::uint32_t col);
void reduce_batch(std::span<SparseVec> vs, const std::vector<SparseVec>& rows,
                  const std::vector<std::int32_t>& pivot_row);
int max_threads();
}  // namespace parallel

}  // namespace rht::kernels
