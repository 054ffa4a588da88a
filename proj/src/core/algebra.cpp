#include "rht/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace rht {

GeneratorContext::GeneratorContext(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::unordered_set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.degree < 1)
      throw std::invalid_argument("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                                  "; free contexts need degree >= 1");
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator name '" + g.name + "'");
  }
}

std::optional<std::size_t> GeneratorContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

int GeneratorContext::max_degree() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, g.degree);
  return m;
}

ContextPtr make_context(std::vector<Generator> gens) {
  return std::make_shared<const GeneratorContext>(std::move(gens));
}

Monomial Monomial::generator(std::uint32_t gen, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.f_.push_back({gen, exp});
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.gen < b.gen; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.f_.empty() && m.f_.back().gen == f.gen)
      m.f_.back().exp += f.exp;
    else
      m.f_.push_back(f);
  }
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t gen) const {
  for (const auto& f : f_)
    if (f.gen == gen) return f.exp;
  return 0;
}

int Monomial::degree(const GeneratorContext& ctx) const {
  int d = 0;
  for (const auto& f : f_) d += static_cast<int>(f.exp) * ctx.degree(f.gen);
  return d;
}

std::uint32_t Monomial::word_length() const {
  std::uint32_t w = 0;
  for (const auto& f : f_) w += f.exp;
  return w;
}

Monomial Monomial::without_one(std::uint32_t gen) const {
  Monomial m = *this;
  for (auto it = m.f_.begin(); it != m.f_.end(); ++it) {
    if (it->gen != gen) continue;
    if (--it->exp == 0) m.f_.erase(it);
    return m;
  }
  throw std::logic_error("without_one: generator absent");
}

bool Monomial::contains_any_below(std::uint32_t bound) const {
  return !f_.empty() && f_.front().gen < bound;
}

bool Monomial::only_below(std::uint32_t bound) const {
  return f_.empty() || f_.back().gen < bound;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].gen == o.f_[j].gen) {
      if (f_[i].exp != o.f_[j].exp) return f_[i].exp <=> o.f_[j].exp;
      ++i;
      ++j;
    } else if (f_[i].gen < o.f_[j].gen) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i < f_.size()) return std::strong_ordering::greater;
  if (j < o.f_.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& f : f_) {
    h ^= (static_cast<std::size_t>(f.gen) << 20 ^ f.exp) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

SignedMonomial multiply(const GeneratorContext& ctx, const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> out;
  out.reserve(a.factors().size() + b.factors().size());
  auto fa = a.factors();
  auto fb = b.factors();
  // Moving each odd factor of b left past the odd factors of a with larger index.
  int swaps = 0;
  for (const auto& y : fb) {
    if (!ctx.is_odd(y.gen)) continue;
    for (const auto& x : fa) {
      if (!ctx.is_odd(x.gen)) continue;
      if (x.gen == y.gen) return {0, Monomial()};
      if (x.gen > y.gen) ++swaps;
    }
  }
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].gen < fb[j].gen)) {
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].gen < fa[i].gen) {
      out.push_back(fb[j++]);
    } else {
      out.push_back({fa[i].gen, fa[i].exp + fb[j].exp});
      ++i;
      ++j;
    }
  }
  return {swaps % 2 ? -1 : 1, Monomial::from_factors(std::move(out))};
}

std::string format_monomial(const GeneratorContext& ctx, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (const auto& f : m.factors()) {
    if (!s.empty()) s += "*";
    s += ctx[f.gen].name;
    if (f.exp > 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

AlgElement AlgElement::constant(ContextPtr ctx, const Rational& c) {
  AlgElement e(std::move(ctx));
  e.add_term(Monomial(), c);
  return e;
}

AlgElement AlgElement::generator(ContextPtr ctx, std::size_t gen) {
  AlgElement e(std::move(ctx));
  e.add_term(Monomial::generator(static_cast<std::uint32_t>(gen)), 1);
  return e;
}

AlgElement AlgElement::monomial(ContextPtr ctx, const Monomial& m, const Rational& c) {
  AlgElement e(std::move(ctx));
  for (const auto& f : m.factors())
    if (f.exp > 1 && e.ctx_->is_odd(f.gen)) return e;
  e.add_term(m, c);
  return e;
}

Rational AlgElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> AlgElement::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree(*ctx_);
}

bool AlgElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree(*ctx_);
  for (const auto& [m, c] : terms_)
    if (m.degree(*ctx_) != d) return false;
  return true;
}

void AlgElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AlgElement::check_context(const AlgElement& o) const {
  if (o.terms_.empty() || terms_.empty()) return;
  if (ctx_ == o.ctx_) return;
  if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_)) throw ContextMismatch("elements live in different generator contexts");
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  check_context(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  check_context(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgElement& AlgElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

AlgElement AlgElement::operator-() const {
  AlgElement r = *this;
  r *= Rational(-1);
  return r;
}

bool AlgElement::operator==(const AlgElement& o) const {
  if (terms_.empty() || o.terms_.empty()) return terms_.empty() && o.terms_.empty();
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) return false;
  return terms_ == o.terms_;
}

std::string AlgElement::to_string() const {
  if (terms_.empty()) return "0";
  // Highest monomials first reads more naturally (a^2 + b before 1).
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      os << rht::to_string(a);
    } else {
      if (a != 1) os << rht::to_string(a) << "*";
      os << format_monomial(*ctx_, m);
    }
  }
  return os.str();
}

AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
AlgElement operator*(AlgElement a, const Rational& c) { return a *= c; }
AlgElement operator*(const Rational& c, AlgElement a) { return a *= c; }

AlgElement multiply(const AlgElement& x, const AlgElement& y) {
  ContextPtr ctx = x.context() ? x.context() : y.context();
  AlgElement r(ctx);
  if (x.is_zero() || y.is_zero()) return r;
  if (x.context() != y.context() && !(*x.context() == *y.context()))
    throw ContextMismatch("multiply: elements live in different generator contexts");
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) {
      auto p = multiply(*ctx, m1, m2);
      if (p.sign == 0) continue;
      r.add_term(p.mono, p.sign > 0 ? Rational(c1 * c2) : Rational(-c1 * c2));
    }
  }
  return r;
}

AlgElement operator*(const AlgElement& x, const AlgElement& y) { return multiply(x, y); }

AlgElement power(const AlgElement& x, unsigned e) {
  AlgElement r = AlgElement::constant(x.context(), 1);
  for (unsigned i = 0; i < e; ++i) r = multiply(r, x);
  return r;
}

AlgElement transport(const AlgElement& x, const ContextPtr& target, std::span<const std::size_t> remap) {
  AlgElement r(target);
  for (const auto& [m, c] : x.terms()) {
    AlgElement t = AlgElement::constant(target, c);
    for (const auto& f : m.factors())
      t = multiply(t, AlgElement::monomial(target, Monomial::generator(static_cast<std::uint32_t>(remap[f.gen]), f.exp)));
    r += t;
  }
  return r;
}

Derivation::Derivation(ContextPtr ctx, int shift, std::vector<std::optional<AlgElement>> images)
    : ctx_(std::move(ctx)), shift_(shift), images_(std::move(images)) {
  if (images_.size() != ctx_->size()) throw std::invalid_argument("derivation: image count does not match context");
}

const AlgElement& Derivation::image(std::size_t gen) const {
  if (!images_[gen]) throw MissingImage("generator '" + (*ctx_)[gen].name + "' has no image");
  return *images_[gen];
}

AlgElement Derivation::apply(const Monomial& m) const {
  AlgElement r(ctx_);
  auto fs = m.factors();
  int prefix_degree = 0;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const auto& f = fs[k];
    const AlgElement& img = image(f.gen);
    if (!img.is_zero()) {
      std::vector<Monomial::Factor> pre(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(k));
      if (f.exp > 1) pre.push_back({f.gen, f.exp - 1});
      std::vector<Monomial::Factor> post(fs.begin() + static_cast<std::ptrdiff_t>(k) + 1, fs.end());
      // Even generators commute with everything, so x^{e-1} may sit in the prefix.
      AlgElement left = AlgElement::monomial(ctx_, Monomial::from_factors(pre));
      AlgElement right = AlgElement::monomial(ctx_, Monomial::from_factors(post));
      AlgElement term = multiply(multiply(left, img), right);
      Rational coef = f.exp;
      if ((static_cast<long>(shift_) * prefix_degree) % 2 != 0) coef = -coef;
      term *= coef;
      r += term;
    }
    prefix_degree += static_cast<int>(f.exp) * ctx_->degree(f.gen);
  }
  return r;
}

AlgElement Derivation::apply(const AlgElement& x) const {
  if (!x.is_zero() && x.context() != ctx_ && !(*x.context() == *ctx_))
    throw ContextMismatch("derivation applied to element of another context");
  AlgElement r(ctx_);
  for (const auto& [m, c] : x.terms()) r += apply(m) * c;
  return r;
}

AlgElement apply_derivation(const Derivation& theta, const AlgElement& x) { return theta.apply(x); }

std::vector<Monomial> degree_basis(const GeneratorContext& ctx, int n, const Budget& budget) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx.degree(static_cast<std::uint32_t>(i)) < 1) throw std::invalid_argument("degree-0 generator in free context");
  std::vector<Monomial::Factor> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (rest == 0) {
      out.push_back(Monomial::from_factors(cur));
      if (out.size() > budget.max_monomials_per_degree)
        throw BudgetExceeded("more than " + std::to_string(budget.max_monomials_per_degree) +
                             " monomials in degree " + std::to_string(n));
      return;
    }
    if (i == ctx.size()) return;
    int d = ctx.degree(i);
    std::uint32_t max_e = ctx.is_odd(i) ? 1u : static_cast<std::uint32_t>(rest / d);
    if (ctx.is_odd(i) && d > rest) max_e = 0;
    for (std::uint32_t e = 0; e <= max_e; ++e) {
      if (e > 0) cur.push_back({static_cast<std::uint32_t>(i), e});
      rec(i + 1, rest - static_cast<int>(e) * d);
      if (e > 0) cur.pop_back();
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rht
