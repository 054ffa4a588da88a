#include "rht/quotient.hpp"

#include <stdexcept>

namespace rht {

void add_to(MixedElement& x, const MixedTerm& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = x.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) x.erase(it);
  }
}

RelativeAlgebra::RelativeAlgebra(AlgebraPtr base, ContextPtr fiber, std::vector<MixedElement> d_fiber, Budget budget)
    : base_(std::move(base)), ctx_(std::move(fiber)), d_fiber_(std::move(d_fiber)), budget_(budget) {
  if (d_fiber_.size() != ctx_->size()) throw std::invalid_argument("relative algebra: one differential per generator");
  if (!base_->max_degree()) throw std::invalid_argument("relative algebra: base must be bounded above");
  if (!base_->unit_index()) throw std::invalid_argument("relative algebra: base must be unital");
}

int RelativeAlgebra::base_top() const { return *base_->max_degree(); }

const RelativeAlgebra::DegreeData& RelativeAlgebra::data(int n) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = cache_.find(n);
  if (it != cache_.end()) return *it->second;
  auto dd = std::make_unique<DegreeData>();
  for (int p = base_->min_degree(); p <= std::min(base_top(), n); ++p) {
    std::size_t dp = base_->dim(p);
    if (dp == 0) continue;
    auto monos = degree_basis(*ctx_, n - p, budget_);
    for (std::size_t b = 0; b < dp; ++b)
      for (const auto& m : monos) {
        MixedTerm t{p, b, m};
        dd->index.emplace(t, dd->basis.size());
        dd->basis.push_back(std::move(t));
        if (dd->basis.size() > budget_.max_monomials_per_degree)
          throw BudgetExceeded("relative algebra basis too large in degree " + std::to_string(n));
      }
  }
  auto& ref = *dd;
  cache_.emplace(n, std::move(dd));
  return ref;
}

const std::vector<MixedTerm>& RelativeAlgebra::basis(int n) const { return data(n).basis; }

std::optional<std::size_t> RelativeAlgebra::index_of(int n, const MixedTerm& t) const {
  const auto& dd = data(n);
  auto it = dd.index.find(t);
  if (it == dd.index.end()) return std::nullopt;
  return it->second;
}

SparseVec RelativeAlgebra::to_vector(int n, const MixedElement& x) const {
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  for (const auto& [t, c] : x) {
    auto i = index_of(n, t);
    if (!i) throw std::invalid_argument("relative algebra: term not of degree " + std::to_string(n));
    acc.emplace_back(static_cast<std::uint32_t>(*i), c);
  }
  return sv::collect(std::move(acc));
}

MixedElement RelativeAlgebra::base_element(int degree, const SparseVec& v) const {
  MixedElement x;
  for (const auto& [i, c] : v) add_to(x, {degree, i, Monomial()}, c);
  return x;
}

MixedElement RelativeAlgebra::fiber_generator(std::size_t g) const {
  MixedElement x;
  add_to(x, {0, *base_->unit_index(), Monomial::generator(static_cast<std::uint32_t>(g))}, 1);
  return x;
}

MixedElement RelativeAlgebra::mul(const MixedElement& x, const MixedElement& y) const {
  MixedElement r;
  for (const auto& [s, c] : x)
    for (const auto& [t, e] : y) {
      auto mm = multiply(*ctx_, s.mono, t.mono);
      if (mm.sign == 0) continue;
      SparseVec bb = base_->product(s.base_degree, s.base_index, t.base_degree, t.base_index);
      if (bb.empty()) continue;
      int sign = mm.sign;
      if ((static_cast<long>(s.mono.degree(*ctx_)) * t.base_degree) % 2 != 0) sign = -sign;
      for (const auto& [k, v] : bb)
        add_to(r, {s.base_degree + t.base_degree, k, mm.mono}, sign > 0 ? Rational(c * e * v) : Rational(-c * e * v));
    }
  return r;
}

MixedElement RelativeAlgebra::d_monomial(const Monomial& m) const {
  if (m.is_unit()) return {};
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = d_cache_.find(m);
    if (it != d_cache_.end()) return it->second;
  }
  std::uint32_t g = m.factors().front().gen;
  Monomial rest = m.without_one(g);
  MixedElement rest_el;
  add_to(rest_el, {0, *base_->unit_index(), rest}, 1);
  MixedElement r = mul(d_fiber_[g], rest_el);
  MixedElement tail = mul(fiber_generator(g), d_monomial(rest));
  bool neg = ctx_->is_odd(g);
  for (const auto& [t, c] : tail) add_to(r, t, neg ? Rational(-c) : c);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  d_cache_.emplace(m, r);
  return r;
}

MixedElement RelativeAlgebra::d(const MixedElement& x) const {
  MixedElement r;
  for (const auto& [t, c] : x) {
    for (const auto& [k, v] : base_->differential(t.base_degree, t.base_index))
      add_to(r, {t.base_degree + 1, k, t.mono}, c * v);
    MixedElement bt = base_element(t.base_degree, sv::unit(static_cast<std::uint32_t>(t.base_index)));
    MixedElement tail = mul(bt, d_monomial(t.mono));
    bool neg = t.base_degree % 2 != 0;
    for (const auto& [s, e] : tail) add_to(r, s, neg ? Rational(-c * e) : Rational(c * e));
  }
  return r;
}

SparseVec RelativeAlgebra::differential(int n, std::size_t i) const {
  MixedElement x;
  add_to(x, basis(n).at(i), 1);
  return to_vector(n + 1, d(x));
}

SparseVec RelativeAlgebra::product(int p, std::size_t i, int q, std::size_t j) const {
  MixedElement x, y;
  add_to(x, basis(p).at(i), 1);
  add_to(y, basis(q).at(j), 1);
  return to_vector(p + q, mul(x, y));
}

std::string RelativeAlgebra::label(int n, std::size_t i) const {
  const auto& t = basis(n).at(i);
  std::string b = base_->label(t.base_degree, t.base_index);
  if (t.mono.is_unit()) return b;
  std::string m = format_monomial(*ctx_, t.mono);
  if (base_->unit_index() && t.base_degree == 0 && t.base_index == *base_->unit_index()) return m;
  return b + "*" + m;
}

std::optional<int> RelativeAlgebra::max_degree() const {
  int total = base_top();
  for (std::size_t g = 0; g < ctx_->size(); ++g) {
    if (!ctx_->is_odd(g)) return std::nullopt;
    total += ctx_->degree(g);
  }
  return total;
}

std::optional<std::size_t> RelativeAlgebra::unit_index() const {
  return index_of(0, {0, *base_->unit_index(), Monomial()});
}

}  // namespace rht
