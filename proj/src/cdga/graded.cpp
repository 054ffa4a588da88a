#include "rht/graded.hpp"

#include <sstream>

namespace rht {

SparseVec apply_d(const GradedAlgebra& a, int n, const SparseVec& x) {
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  for (const auto& [i, c] : x)
    for (const auto& [j, v] : a.differential(n, i)) acc.emplace_back(j, c * v);
  return sv::collect(std::move(acc));
}

SparseVec multiply(const GradedAlgebra& a, int p, const SparseVec& x, int q, const SparseVec& y) {
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  for (const auto& [i, c] : x)
    for (const auto& [j, e] : y)
      for (const auto& [k, v] : a.product(p, i, q, j)) acc.emplace_back(k, c * e * v);
  return sv::collect(std::move(acc));
}

Cochain multiply(const GradedAlgebra& a, const Cochain& x, const Cochain& y) {
  return {x.degree + y.degree, multiply(a, x.degree, x.coeffs, y.degree, y.coeffs)};
}

RationalMatrix differential_matrix(const GradedAlgebra& a, int n) {
  std::size_t cols = a.dim(n);
  std::size_t rows = a.dim(n + 1);
  std::vector<SparseVec> columns(cols);
  for (std::size_t i = 0; i < cols; ++i) columns[i] = a.differential(n, i);
  return RationalMatrix::from_columns(rows, std::move(columns));
}

std::string format_vector(const GradedAlgebra& a, int n, const SparseVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    Rational m = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::string lab = a.label(n, i);
    if (m != 1)
      os << to_string(m) << "*" << lab;
    else
      os << lab;
  }
  return os.str();
}

Cochain unit_cochain(const GradedAlgebra& a) {
  auto u = a.unit_index();
  if (!u) return {0, {}};
  return {0, sv::unit(static_cast<std::uint32_t>(*u))};
}

}  // namespace rht
