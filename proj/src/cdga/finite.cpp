#include "rht/finite.hpp"

#include <stdexcept>

namespace rht {

FiniteCDGA::Ref FiniteCDGA::Builder::add(int degree, std::string label) {
  auto& v = labels_[degree];
  v.push_back(std::move(label));
  return {degree, v.size() - 1};
}

void FiniteCDGA::Builder::set_product(Ref a, Ref b, SparseVec value) {
  mult_[{a.degree, a.index, b.degree, b.index}] = std::move(value);
}

void FiniteCDGA::Builder::set_product_commutative(Ref a, Ref b, SparseVec value) {
  bool odd = (static_cast<long>(a.degree) * b.degree) % 2 != 0;
  set_product(b, a, odd ? sv::scale(value, -1) : value);
  set_product(a, b, std::move(value));
}

void FiniteCDGA::Builder::set_differential(Ref a, SparseVec value) { diff_[{a.degree, a.index}] = std::move(value); }

FiniteCDGA FiniteCDGA::Builder::build() const {
  FiniteCDGA f;
  if (!labels_.empty()) {
    f.lo_ = labels_.begin()->first;
    f.hi_ = labels_.rbegin()->first;
  }
  std::size_t span = f.hi_ >= f.lo_ ? static_cast<std::size_t>(f.hi_ - f.lo_ + 1) : 0;
  f.labels_.resize(span);
  f.diff_.resize(span);
  for (const auto& [deg, labs] : labels_) {
    f.labels_[static_cast<std::size_t>(deg - f.lo_)] = labs;
    f.diff_[static_cast<std::size_t>(deg - f.lo_)].resize(labs.size());
  }
  for (const auto& [key, v] : diff_) {
    auto [deg, idx] = key;
    if (deg < f.lo_ || deg > f.hi_ || idx >= f.dim(deg)) throw std::out_of_range("differential of unknown basis element");
    for (const auto& e : v)
      if (e.first >= f.dim(deg + 1)) throw std::out_of_range("differential value outside degree basis");
    f.diff_[static_cast<std::size_t>(deg - f.lo_)][idx] = v;
  }
  for (const auto& [key, v] : mult_) {
    if (v.empty()) continue;
    auto [p, i, q, j] = key;
    if (i >= f.dim(p) || j >= f.dim(q)) throw std::out_of_range("product of unknown basis elements");
    for (const auto& e : v)
      if (e.first >= f.dim(p + q)) throw std::out_of_range("product value outside degree basis");
    f.mult_[key] = v;
  }
  f.unit_ = unit_;
  if (unit_) {
    auto u = *unit_;
    if (u.degree != 0 || u.index >= f.dim(0)) throw std::out_of_range("unit must be a degree-0 basis element");
    for (int n = f.lo_; n <= f.hi_; ++n)
      for (std::size_t i = 0; i < f.dim(n); ++i) {
        f.mult_.try_emplace({0, u.index, n, i}, sv::unit(static_cast<std::uint32_t>(i)));
        f.mult_.try_emplace({n, i, 0, u.index}, sv::unit(static_cast<std::uint32_t>(i)));
      }
  }
  return f;
}

FiniteCDGA FiniteCDGA::from_view(const GradedAlgebra& a, int lo, int hi) {
  Builder b;
  for (int n = lo; n <= hi; ++n)
    for (std::size_t i = 0; i < a.dim(n); ++i) b.add(n, a.label(n, i));
  for (int n = lo; n <= hi; ++n) {
    for (std::size_t i = 0; i < a.dim(n); ++i) {
      if (n + 1 <= hi) b.set_differential({n, i}, a.differential(n, i));
      for (int m = lo; m + n <= hi; ++m)
        for (std::size_t j = 0; j < a.dim(m); ++j) {
          if (n + m < lo) continue;
          auto v = a.product(n, i, m, j);
          if (!v.empty()) b.set_product({n, i}, {m, j}, std::move(v));
        }
    }
  }
  if (auto u = a.unit_index(); u && lo <= 0 && hi >= 0) b.set_unit({0, *u});
  return b.build();
}

std::size_t FiniteCDGA::dim(int n) const {
  if (n < lo_ || n > hi_) return 0;
  return labels_[static_cast<std::size_t>(n - lo_)].size();
}

SparseVec FiniteCDGA::differential(int n, std::size_t i) const {
  if (n < lo_ || n > hi_) throw std::out_of_range("differential: degree outside algebra");
  return diff_[static_cast<std::size_t>(n - lo_)].at(i);
}

SparseVec FiniteCDGA::product(int p, std::size_t i, int q, std::size_t j) const {
  auto it = mult_.find({p, i, q, j});
  if (it == mult_.end()) return {};
  return it->second;
}

std::string FiniteCDGA::label(int n, std::size_t i) const { return labels_.at(static_cast<std::size_t>(n - lo_)).at(i); }

std::optional<std::size_t> FiniteCDGA::unit_index() const {
  if (!unit_) return std::nullopt;
  return unit_->index;
}

std::size_t FiniteCDGA::total_dim() const {
  std::size_t t = 0;
  for (const auto& l : labels_) t += l.size();
  return t;
}

std::optional<FiniteCDGA::Ref> FiniteCDGA::find(std::string_view label) const {
  for (int n = lo_; n <= hi_; ++n)
    for (std::size_t i = 0; i < dim(n); ++i)
      if (labels_[static_cast<std::size_t>(n - lo_)][i] == label) return Ref{n, i};
  return std::nullopt;
}

bool FiniteCDGA::has_zero_differential() const {
  for (const auto& d : diff_)
    for (const auto& v : d)
      if (!v.empty()) return false;
  return true;
}

}  // namespace rht
