#include "rht/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace rht {

TensorAlgebra::TensorAlgebra(AlgebraPtr a, AlgebraPtr b) : a_(std::move(a)), b_(std::move(b)) {}

const TensorAlgebra::DegreeData& TensorAlgebra::data(int n) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = cache_.find(n);
  if (it != cache_.end()) return *it->second;
  auto dd = std::make_unique<DegreeData>();
  int p_hi = n - b_->min_degree();
  if (auto am = a_->max_degree()) p_hi = std::min(p_hi, *am);
  for (int p = a_->min_degree(); p <= p_hi; ++p) {
    int q = n - p;
    if (auto bm = b_->max_degree(); bm && q > *bm) continue;
    std::size_t da = a_->dim(p);
    if (da == 0) continue;
    std::size_t db = b_->dim(q);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) {
        Term t{p, i, q, j};
        dd->index.emplace(t, dd->basis.size());
        dd->basis.push_back(t);
      }
  }
  auto& ref = *dd;
  cache_.emplace(n, std::move(dd));
  return ref;
}

const std::vector<TensorAlgebra::Term>& TensorAlgebra::basis(int n) const { return data(n).basis; }

std::size_t TensorAlgebra::index_of(int n, const Term& t) const { return data(n).index.at(t); }

SparseVec TensorAlgebra::tensor(int p, const SparseVec& x, int q, const SparseVec& y) const {
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  for (const auto& [i, c] : x)
    for (const auto& [j, e] : y) acc.emplace_back(static_cast<std::uint32_t>(index_of(p + q, {p, i, q, j})), c * e);
  return sv::collect(std::move(acc));
}

SparseVec TensorAlgebra::differential(int n, std::size_t idx) const {
  Term t = basis(n).at(idx);
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  for (const auto& [k, c] : a_->differential(t.p, t.i))
    acc.emplace_back(static_cast<std::uint32_t>(index_of(n + 1, {t.p + 1, k, t.q, t.j})), c);
  bool neg = t.p % 2 != 0;
  for (const auto& [k, c] : b_->differential(t.q, t.j))
    acc.emplace_back(static_cast<std::uint32_t>(index_of(n + 1, {t.p, t.i, t.q + 1, k})), neg ? Rational(-c) : c);
  return sv::collect(std::move(acc));
}

SparseVec TensorAlgebra::product(int p, std::size_t i, int q, std::size_t j) const {
  Term x = basis(p).at(i);
  Term y = basis(q).at(j);
  SparseVec ab = a_->product(x.p, x.i, y.p, y.i);
  if (ab.empty()) return {};
  SparseVec cd = b_->product(x.q, x.j, y.q, y.j);
  if (cd.empty()) return {};
  SparseVec r = tensor(x.p + y.p, ab, x.q + y.q, cd);
  if ((static_cast<long>(x.q) * y.p) % 2 != 0) r = sv::scale(r, -1);
  return r;
}

std::string TensorAlgebra::label(int n, std::size_t i) const {
  Term t = basis(n).at(i);
  return a_->label(t.p, t.i) + "⊗" + b_->label(t.q, t.j);
}

std::optional<int> TensorAlgebra::max_degree() const {
  auto am = a_->max_degree();
  auto bm = b_->max_degree();
  if (!am || !bm) return std::nullopt;
  return *am + *bm;
}

std::optional<std::size_t> TensorAlgebra::unit_index() const {
  auto ua = a_->unit_index();
  auto ub = b_->unit_index();
  if (!ua || !ub) return std::nullopt;
  return index_of(0, {0, *ua, 0, *ub});
}

QuotientAlgebra::QuotientAlgebra(AlgebraPtr ambient, std::vector<Cochain> ideal, LinalgOptions opts)
    : ambient_(std::move(ambient)), ideal_(std::move(ideal)), opts_(opts) {
  std::erase_if(ideal_, [](const Cochain& c) { return c.coeffs.empty(); });
}

const QuotientAlgebra::DegreeData& QuotientAlgebra::data(int n) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = cache_.find(n);
  if (it != cache_.end()) return *it->second;
  const std::size_t dn = ambient_->dim(n);
  auto dd = std::make_unique<DegreeData>(DegreeData{Echelon(dn, opts_), {}, {}});
  for (const auto& g : ideal_) {
    int k = n - g.degree;
    if (k < ambient_->min_degree()) continue;
    if (auto top = ambient_->max_degree(); top && k > *top) continue;
    std::size_t dk = ambient_->dim(k);
    for (std::size_t e = 0; e < dk; ++e) {
      SparseVec v = multiply(*ambient_, k, sv::unit(static_cast<std::uint32_t>(e)), g.degree, g.coeffs);
      if (!v.empty()) dd->span.insert(v);
    }
  }
  dd->position.assign(dn, -1);
  for (std::size_t i = 0; i < dn; ++i) {
    if (dd->span.is_pivot(static_cast<std::uint32_t>(i))) continue;
    dd->position[i] = static_cast<std::int64_t>(dd->standard.size());
    dd->standard.push_back(i);
  }
  auto& ref = *dd;
  cache_.emplace(n, std::move(dd));
  return ref;
}

const Echelon& QuotientAlgebra::ideal_span(int n) const { return data(n).span; }

bool QuotientAlgebra::ideal_contains(int n, const SparseVec& v) const { return data(n).span.contains(v); }

SparseVec QuotientAlgebra::project(int n, const SparseVec& v) const {
  const auto& dd = data(n);
  SparseVec r = dd.span.reduce(v);
  SparseVec out;
  out.reserve(r.size());
  for (auto& [i, c] : r) {
    auto pos = dd.position.at(i);
    if (pos < 0) throw std::logic_error("quotient projection hit a pivot column");
    out.emplace_back(static_cast<std::uint32_t>(pos), std::move(c));
  }
  return out;
}

std::size_t QuotientAlgebra::lift_index(int n, std::size_t i) const { return data(n).standard.at(i); }

SparseVec QuotientAlgebra::lift(int n, const SparseVec& v) const {
  const auto& dd = data(n);
  SparseVec out;
  for (const auto& [i, c] : v) out.emplace_back(static_cast<std::uint32_t>(dd.standard.at(i)), c);
  return out;
}

std::size_t QuotientAlgebra::dim(int n) const { return data(n).standard.size(); }

SparseVec QuotientAlgebra::differential(int n, std::size_t i) const {
  return project(n + 1, ambient_->differential(n, lift_index(n, i)));
}

SparseVec QuotientAlgebra::product(int p, std::size_t i, int q, std::size_t j) const {
  return project(p + q, ambient_->product(p, lift_index(p, i), q, lift_index(q, j)));
}

std::string QuotientAlgebra::label(int n, std::size_t i) const { return ambient_->label(n, lift_index(n, i)); }

std::optional<std::size_t> QuotientAlgebra::unit_index() const {
  auto u = ambient_->unit_index();
  if (!u) return std::nullopt;
  const auto& dd = data(0);
  auto pos = dd.position.at(*u);
  if (pos < 0) return std::nullopt;
  if (project(0, sv::unit(static_cast<std::uint32_t>(*u))) != sv::unit(static_cast<std::uint32_t>(pos)))
    return std::nullopt;
  return static_cast<std::size_t>(pos);
}

}  // namespace rht
