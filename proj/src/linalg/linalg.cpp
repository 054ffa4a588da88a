#include "rht/linalg.hpp"

#include "rht/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace rht {

namespace sv {

Rational get(const SparseVec& v, std::uint32_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, std::uint32_t k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return 0;
}

SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
  if (c == 0) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rational x = a[i].second + c * b[j].second;
      if (x != 0) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec add(const SparseVec& a, const SparseVec& b) { return axpy(a, 1, b); }
SparseVec sub(const SparseVec& a, const SparseVec& b) { return axpy(a, -1, b); }

SparseVec scale(const SparseVec& a, const Rational& c) {
  if (c == 0) return {};
  SparseVec out = a;
  for (auto& e : out) e.second *= c;
  return out;
}

Rational dot(const SparseVec& a, const SparseVec& b) {
  Rational s = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      ++i;
    else if (b[j].first < a[i].first)
      ++j;
    else
      s += a[i++].second * b[j++].second;
  }
  return s;
}

SparseVec unit(std::uint32_t i) { return {{i, Rational(1)}}; }

SparseVec from_dense(const std::vector<Rational>& d) {
  SparseVec out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), d[i]);
  return out;
}

std::vector<Rational> to_dense(const SparseVec& v, std::size_t n) {
  std::vector<Rational> d(n);
  for (const auto& [i, x] : v) {
    if (i >= n) throw std::out_of_range("to_dense: index beyond length");
    d[i] = x;
  }
  return d;
}

SparseVec collect(std::vector<std::pair<std::uint32_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, x] : entries) {
    if (!out.empty() && out.back().first == i)
      out.back().second += x;
    else
      out.emplace_back(i, std::move(x));
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

}  // namespace sv

RationalMatrix RationalMatrix::from_columns(std::size_t rows, std::vector<SparseVec> columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, x] : columns[c])
      if (r >= rows) throw std::out_of_range("column entry beyond row count");
    m.columns_[c] = std::move(columns[c]);
  }
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows[0].size() : 0;
  RationalMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < nc; ++c)
      if (rows[r][c] != 0) m.columns_[c].emplace_back(static_cast<std::uint32_t>(r), rows[r][c]);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = sv::unit(static_cast<std::uint32_t>(i));
  return m;
}

Rational RationalMatrix::entry(std::size_t r, std::size_t c) const {
  return sv::get(columns_.at(c), static_cast<std::uint32_t>(r));
}

SparseVec RationalMatrix::apply(const SparseVec& x) const {
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  for (const auto& [c, xc] : x)
    for (const auto& [r, v] : columns_.at(c)) acc.emplace_back(r, xc * v);
  return sv::collect(std::move(acc));
}

std::vector<SparseVec> RationalMatrix::row_vectors() const {
  std::vector<SparseVec> rows(rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, x] : columns_[c]) rows[r].emplace_back(static_cast<std::uint32_t>(c), x);
  return rows;
}

Echelon::Echelon(std::size_t dim, LinalgOptions opts, std::size_t pivot_limit)
    : dim_(dim), opts_(opts), pivot_limit_(std::min(pivot_limit, dim)), pivot_row_(dim, -1) {}

std::optional<std::size_t> Echelon::row_of_pivot(std::uint32_t col) const {
  if (col >= pivot_row_.size() || pivot_row_[col] < 0) return std::nullopt;
  return static_cast<std::size_t>(pivot_row_[col]);
}

SparseVec Echelon::reduce(const SparseVec& v) const { return kernels::reduce_one(v, rows_, pivot_row_); }

std::vector<SparseVec> Echelon::reduce_all(std::span<const SparseVec> vs) const {
  std::vector<SparseVec> out(vs.begin(), vs.end());
  if (opts_.backend == Backend::Parallel)
    kernels::parallel::reduce_batch(out, rows_, pivot_row_);
  else
    kernels::serial::reduce_batch(out, rows_, pivot_row_);
  return out;
}

bool Echelon::insert(const SparseVec& v, SparseVec* residual) {
  for (const auto& e : v)
    if (e.first >= dim_) throw std::out_of_range("echelon: vector entry beyond dimension");
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  std::size_t best = SIZE_MAX;
  std::size_t best_cost = SIZE_MAX;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k].first >= pivot_limit_) break;
    if (opts_.pivot == PivotPolicy::LargestIndex) {
      best = k;
      continue;
    }
    std::size_t cost = bit_size(r[k].second);
    if (cost < best_cost) {
      best_cost = cost;
      best = k;
    }
  }
  if (best == SIZE_MAX) {
    if (residual) *residual = std::move(r);
    return false;
  }
  std::uint32_t col = r[best].first;
  Rational inv = 1 / r[best].second;
  r = sv::scale(r, inv);
  if (opts_.backend == Backend::Parallel)
    kernels::parallel::eliminate_column(rows_, r, col);
  else
    kernels::serial::eliminate_column(rows_, r, col);
  pivot_row_[col] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  pivots_.push_back(col);
  return true;
}

SparseVec Echelon::coordinates(const SparseVec& v) const {
  SparseVec out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational c = sv::get(v, pivots_[i]);
    if (c != 0) out.emplace_back(static_cast<std::uint32_t>(i), std::move(c));
  }
  return out;
}

LinearSolution solve_linear(const RationalMatrix& m, std::span<const SparseVec> targets, const LinalgOptions& opts) {
  const std::size_t cols = m.cols();
  const std::size_t width = cols + targets.size();
  std::vector<SparseVec> rows(m.rows());
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, x] : m.column(c)) rows[r].emplace_back(static_cast<std::uint32_t>(c), x);
  for (std::size_t j = 0; j < targets.size(); ++j)
    for (const auto& [r, x] : targets[j]) {
      if (r >= m.rows()) throw std::out_of_range("solve_linear: target longer than row count");
      rows[r].emplace_back(static_cast<std::uint32_t>(cols + j), x);
    }

  Echelon e(width, opts, cols);
  Echelon residuals(width, opts);
  for (const auto& row : rows) {
    SparseVec res;
    if (!e.insert(row, &res) && !res.empty()) residuals.insert(res);
  }

  LinearSolution sol;
  sol.rank = e.rank();
  std::vector<std::int32_t> kernel_slot(cols, -1);
  for (std::uint32_t c = 0; c < cols; ++c) {
    if (e.is_pivot(c)) continue;
    kernel_slot[c] = static_cast<std::int32_t>(sol.kernel.size());
    sol.kernel.push_back(sv::unit(c));
  }
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const auto p = e.pivots()[i];
    for (const auto& [c, x] : e.rows()[i]) {
      if (c >= cols || c == p) continue;
      sol.kernel[static_cast<std::size_t>(kernel_slot[c])].emplace_back(p, -x);
    }
  }
  for (auto& k : sol.kernel)
    std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  sol.image_columns = e.pivots();
  std::sort(sol.image_columns.begin(), sol.image_columns.end());
  for (auto c : sol.image_columns) sol.image.push_back(m.column(c));

  for (std::size_t j = 0; j < targets.size(); ++j) {
    const auto tj = static_cast<std::uint32_t>(cols + j);
    bool ok = true;
    for (const auto& r : residuals.rows())
      if (sv::get(r, tj) != 0) {
        ok = false;
        break;
      }
    if (!ok) {
      sol.solutions.emplace_back(std::nullopt);
      continue;
    }
    std::vector<std::pair<std::uint32_t, Rational>> x;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      Rational v = sv::get(e.rows()[i], tj);
      if (v != 0) x.emplace_back(e.pivots()[i], v);
    }
    sol.solutions.emplace_back(sv::collect(std::move(x)));
  }
  return sol;
}

std::size_t rank_of(std::span<const SparseVec> vectors, std::size_t dim, const LinalgOptions& opts) {
  Echelon e(dim, opts);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace rht
