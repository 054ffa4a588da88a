#include "rht/morphism.hpp"

#include <stdexcept>

namespace rht {

Morphism Morphism::on_generators(SullivanPtr source, AlgebraPtr target, std::vector<SparseVec> images) {
  if (images.size() != source->presentation().size())
    throw std::invalid_argument("morphism: one image per source generator required");
  Morphism f;
  f.source_ = source;
  f.target_ = std::move(target);
  f.sullivan_ = std::move(source);
  f.gen_images_ = std::move(images);
  f.cache_ = std::make_shared<Cache>();
  return f;
}

Morphism Morphism::on_basis(AlgebraPtr source, AlgebraPtr target, std::map<int, std::vector<SparseVec>> images) {
  Morphism f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.basis_images_ = std::move(images);
  f.cache_ = std::make_shared<Cache>();
  return f;
}

Morphism Morphism::identity(AlgebraPtr a) {
  Morphism f;
  f.source_ = a;
  f.target_ = std::move(a);
  f.identity_ = true;
  f.sullivan_ = std::dynamic_pointer_cast<const SullivanAlgebra>(f.source_);
  if (f.sullivan_) {
    const auto& ctx = *f.sullivan_->context();
    for (std::size_t g = 0; g < ctx.size(); ++g) {
      auto m = Monomial::generator(static_cast<std::uint32_t>(g));
      f.gen_images_.push_back(sv::unit(static_cast<std::uint32_t>(*f.sullivan_->index_of(ctx.degree(g), m))));
    }
  }
  f.cache_ = std::make_shared<Cache>();
  return f;
}

SparseVec Morphism::image_of_monomial(const Monomial& m) const {
  const auto& ctx = *sullivan_->context();
  if (m.is_unit()) {
    auto u = target_->unit_index();
    if (!u) return {};
    return sv::unit(static_cast<std::uint32_t>(*u));
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->monomial_images.find(m);
    if (it != cache_->monomial_images.end()) return it->second;
  }
  std::uint32_t g = m.factors().front().gen;
  Monomial rest = m.without_one(g);
  SparseVec r = multiply(*target_, ctx.degree(g), gen_images_[g], rest.degree(ctx), image_of_monomial(rest));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->monomial_images.emplace(m, r);
  return r;
}

SparseVec Morphism::apply_basis(int n, std::size_t i) const {
  if (identity_) return sv::unit(static_cast<std::uint32_t>(i));
  if (sullivan_) return image_of_monomial(sullivan_->basis(n).at(i));
  auto it = basis_images_.find(n);
  if (it == basis_images_.end() || i >= it->second.size()) return {};
  return it->second[i];
}

SparseVec Morphism::apply(int n, const SparseVec& x) const {
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  for (const auto& [i, c] : x)
    for (const auto& [j, v] : apply_basis(n, i)) acc.emplace_back(j, c * v);
  return sv::collect(std::move(acc));
}

Cochain Morphism::apply(const AlgElement& x) const {
  if (!sullivan_) throw std::logic_error("polynomial input needs a Sullivan source");
  Cochain c = sullivan_->to_cochain(x);
  return {c.degree, apply(c.degree, c.coeffs)};
}

}  // namespace rht
