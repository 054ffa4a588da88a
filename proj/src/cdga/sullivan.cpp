#include "rht/sullivan.hpp"

#include <algorithm>

namespace rht {

SullivanPresentation::SullivanPresentation() : ctx_(make_context({})) {}

SullivanPresentation::SullivanPresentation(ContextPtr ctx, std::vector<AlgElement> d)
    : ctx_(std::move(ctx)), d_(std::move(d)) {
  if (d_.size() != ctx_->size()) throw std::invalid_argument("presentation: one differential per generator required");
  for (auto& x : d_) {
    if (x.is_zero()) {
      x = AlgElement(ctx_);
      continue;
    }
    if (x.context() != ctx_) {
      if (!(*x.context() == *ctx_)) throw ContextMismatch("presentation: differential in foreign context");
      AlgElement y(ctx_);
      for (const auto& [m, c] : x.terms()) y.add_term(m, c);
      x = std::move(y);
    }
  }
}

AlgElement SullivanPresentation::generator(std::string_view name) const {
  auto i = ctx_->find(name);
  if (!i) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return generator(*i);
}

Derivation SullivanPresentation::derivation() const {
  std::vector<std::optional<AlgElement>> imgs(d_.begin(), d_.end());
  return Derivation(ctx_, 1, std::move(imgs));
}

AlgElement SullivanPresentation::apply_d(const AlgElement& x) const { return derivation().apply(x); }

bool SullivanPresentation::operator==(const SullivanPresentation& o) const {
  if (!(*ctx_ == *o.ctx_)) return false;
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (!(d_[i].terms() == o.d_[i].terms())) return false;
  return true;
}

std::string unique_name(const GeneratorContext& ctx, std::string base) {
  if (!ctx.find(base)) return base;
  for (int k = 2;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!ctx.find(cand)) return cand;
  }
}

AlgElement widen(const AlgElement& x, const ContextPtr& wider) {
  AlgElement y(wider);
  for (const auto& [m, c] : x.terms()) y.add_term(m, c);
  return y;
}

SullivanPresentation with_generators(const SullivanPresentation& p, const std::vector<Generator>& gens,
                                     const std::vector<AlgElement>& d_in_new_context) {
  std::vector<Generator> all = p.context()->generators();
  all.insert(all.end(), gens.begin(), gens.end());
  auto ctx = make_context(std::move(all));
  std::vector<AlgElement> d;
  for (const auto& x : p.differentials()) d.push_back(widen(x, ctx));
  for (const auto& x : d_in_new_context) d.push_back(widen(x, ctx));
  return SullivanPresentation(ctx, std::move(d));
}

SullivanPresentation tensor(const SullivanPresentation& a, const SullivanPresentation& b) {
  std::vector<Generator> all = a.context()->generators();
  for (const auto& g : b.context()->generators()) {
    GeneratorContext sofar(all);
    all.push_back({unique_name(sofar, g.name), g.degree});
  }
  auto ctx = make_context(std::move(all));
  std::vector<std::size_t> remap(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) remap[i] = a.size() + i;
  std::vector<AlgElement> d;
  for (const auto& x : a.differentials()) d.push_back(widen(x, ctx));
  for (const auto& x : b.differentials()) d.push_back(transport(x, ctx, remap));
  return SullivanPresentation(ctx, std::move(d));
}

SullivanAlgebra::SullivanAlgebra(SullivanPresentation p, Budget budget)
    : p_(std::move(p)), budget_(budget), d_(p_.derivation()) {}

const SullivanAlgebra::DegreeData& SullivanAlgebra::data(int n) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(n);
  if (it != cache_.end()) return *it->second;
  auto dd = std::make_unique<DegreeData>();
  if (n >= 0) dd->basis = degree_basis(*p_.context(), n, budget_);
  for (std::size_t i = 0; i < dd->basis.size(); ++i) dd->index.emplace(dd->basis[i], i);
  auto& ref = *dd;
  cache_.emplace(n, std::move(dd));
  return ref;
}

const std::vector<Monomial>& SullivanAlgebra::basis(int n) const { return data(n).basis; }

std::optional<std::size_t> SullivanAlgebra::index_of(int n, const Monomial& m) const {
  const auto& dd = data(n);
  auto it = dd.index.find(m);
  if (it == dd.index.end()) return std::nullopt;
  return it->second;
}

SparseVec SullivanAlgebra::to_vector(int n, const AlgElement& x) const {
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  for (const auto& [m, c] : x.terms()) {
    auto i = index_of(n, m);
    if (!i)
      throw std::invalid_argument("element term " + format_monomial(*p_.context(), m) + " is not of degree " +
                                  std::to_string(n));
    acc.emplace_back(static_cast<std::uint32_t>(*i), c);
  }
  return sv::collect(std::move(acc));
}

AlgElement SullivanAlgebra::to_element(int n, const SparseVec& v) const {
  AlgElement x(p_.context());
  const auto& b = basis(n);
  for (const auto& [i, c] : v) x.add_term(b.at(i), c);
  return x;
}

Cochain SullivanAlgebra::to_cochain(const AlgElement& x) const {
  if (x.is_zero()) return {0, {}};
  auto d = x.degree();
  if (!d) throw std::invalid_argument("to_cochain: element is not homogeneous");
  return {*d, to_vector(*d, x)};
}

std::size_t SullivanAlgebra::dim(int n) const { return data(n).basis.size(); }

SparseVec SullivanAlgebra::differential(int n, std::size_t i) const {
  const Monomial& m = basis(n).at(i);
  return to_vector(n + 1, d_.apply(m));
}

SparseVec SullivanAlgebra::product(int p, std::size_t i, int q, std::size_t j) const {
  auto r = multiply(*p_.context(), basis(p).at(i), basis(q).at(j));
  if (r.sign == 0) return {};
  auto k = index_of(p + q, r.mono);
  return {{static_cast<std::uint32_t>(*k), Rational(r.sign)}};
}

std::string SullivanAlgebra::label(int n, std::size_t i) const { return format_monomial(*p_.context(), basis(n).at(i)); }

std::optional<int> SullivanAlgebra::max_degree() const {
  int total = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!p_.context()->is_odd(i)) return std::nullopt;
    total += p_.context()->degree(i);
  }
  return total;
}

SullivanPtr make_sullivan(SullivanPresentation p, Budget budget) {
  return std::make_shared<const SullivanAlgebra>(std::move(p), budget);
}

}  // namespace rht
