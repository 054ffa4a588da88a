#pragma once

// Independent reference routines used as test oracles. They deliberately
// avoid the library's elimination code.

#include "rht/algebra.hpp"
#include "rht/linalg.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace rht::testing {

// Plain Gauss-Jordan on a dense copy.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Null space of a dense matrix (rows × cols) by Gauss-Jordan.
inline std::vector<std::vector<Rational>> dense_nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::size_t rows = m.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    basis.push_back(v);
  }
  return basis;
}

inline std::vector<std::vector<Rational>> dense(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, x] : m.column(c)) d[r][c] = x;
  return d;
}

inline Rational random_rational(std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.6) {
  std::bernoulli_distribution nz(density);
  std::vector<std::vector<Rational>> d(rows, std::vector<Rational>(cols));
  for (auto& row : d)
    for (auto& x : row)
      if (nz(rng)) x = random_rational(rng);
  return RationalMatrix::from_dense(d);
}

inline AlgElement random_element(std::mt19937& rng, const ContextPtr& ctx, int degree, std::size_t terms = 3) {
  auto basis = degree_basis(*ctx, degree);
  AlgElement x(ctx);
  if (basis.empty()) return x;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (std::size_t t = 0; t < terms; ++t) x.add_term(basis[pick(rng)], random_rational(rng));
  return x;
}

}  // namespace rht::testing
