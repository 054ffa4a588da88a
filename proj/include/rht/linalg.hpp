#pragma once

#include "rht/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rht {

// Sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

namespace sv {
Rational get(const SparseVec& v, std::uint32_t i);
// a + c·b
SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec sub(const SparseVec& a, const SparseVec& b);
SparseVec scale(const SparseVec& a, const Rational& c);
Rational dot(const SparseVec& a, const SparseVec& b);
SparseVec unit(std::uint32_t i);
SparseVec from_dense(const std::vector<Rational>& d);
std::vector<Rational> to_dense(const SparseVec& v, std::size_t n);
// Builds a vector from unsorted (index, value) pairs, summing duplicates.
SparseVec collect(std::vector<std::pair<std::uint32_t, Rational>> entries);
}  // namespace sv

// Column-major sparse matrix: column c is a SparseVec over row indices.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}
  static RationalMatrix from_columns(std::size_t rows, std::vector<SparseVec> columns);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& column(std::size_t c) const { return columns_[c]; }
  const std::vector<SparseVec>& columns() const { return columns_; }
  void set_column(std::size_t c, SparseVec v) { columns_[c] = std::move(v); }
  Rational entry(std::size_t r, std::size_t c) const;
  SparseVec apply(const SparseVec& x) const;
  std::vector<SparseVec> row_vectors() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> columns_;
};

enum class PivotPolicy {
  SmallestEntry,  // smallest numerator·denominator bit-size, ties to lowest index
  LargestIndex,   // last nonzero coordinate; an alternative admissible choice
};

enum class Backend { Serial, Parallel };

struct LinalgOptions {
  PivotPolicy pivot = PivotPolicy::SmallestEntry;
  Backend backend = Backend::Parallel;
};

// Reduced row echelon basis of a growing subspace of Q^dim. Rows have a 1 at
// their pivot and 0 at every other row's pivot.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0, LinalgOptions opts = {}, std::size_t pivot_limit = SIZE_MAX);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  std::optional<std::size_t> row_of_pivot(std::uint32_t col) const;
  bool is_pivot(std::uint32_t col) const { return col < pivot_row_.size() && pivot_row_[col] >= 0; }

  // Returns false when v already lies in the span. A vector whose only
  // nonzero entries are at or beyond pivot_limit is rejected and returned
  // through `residual`.
  bool insert(const SparseVec& v, SparseVec* residual = nullptr);
  SparseVec reduce(const SparseVec& v) const;
  std::vector<SparseVec> reduce_all(std::span<const SparseVec> vs) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // Coefficients of v (assumed in the span) with respect to rows().
  SparseVec coordinates(const SparseVec& v) const;

 private:
  std::size_t dim_;
  LinalgOptions opts_;
  std::size_t pivot_limit_;
  std::vector<SparseVec> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::int32_t> pivot_row_;
};

struct LinearSolution {
  std::size_t rank = 0;
  std::vector<SparseVec> kernel;          // vectors in Q^cols
  std::vector<SparseVec> image;           // vectors in Q^rows (subset of the columns)
  std::vector<std::uint32_t> image_columns;
  std::vector<std::optional<SparseVec>> solutions;  // one per target; nullopt = unsolvable
};

LinearSolution solve_linear(const RationalMatrix& m, std::span<const SparseVec> targets = {},
                            const LinalgOptions& opts = {});

std::size_t rank_of(std::span<const SparseVec> vectors, std::size_t dim, const LinalgOptions& opts = {});

}  // namespace rht
