#pragma once

#include "rht/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rht {

struct Generator {
  std::string name;
  int degree = 1;
  bool operator==(const Generator&) const = default;
};

// Ordered generator list of a free graded-commutative algebra. The order
// fixes monomial normal order and every Koszul sign.
class GeneratorContext {
 public:
  GeneratorContext() = default;
  explicit GeneratorContext(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }
  int degree(std::size_t i) const { return gens_[i].degree; }
  bool is_odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }
  std::optional<std::size_t> find(std::string_view name) const;
  int max_degree() const;

  bool operator==(const GeneratorContext& o) const { return gens_ == o.gens_; }

 private:
  std::vector<Generator> gens_;
};

using ContextPtr = std::shared_ptr<const GeneratorContext>;
ContextPtr make_context(std::vector<Generator> gens);

class ContextMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::size_t max_monomials_per_degree = 200000;
  int default_degree = 16;
};

class Monomial {
 public:
  struct Factor {
    std::uint32_t gen;
    std::uint32_t exp;
    bool operator==(const Factor&) const = default;
  };

  Monomial() = default;
  static Monomial generator(std::uint32_t gen, std::uint32_t exp = 1);
  // Factors need not be sorted; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return f_; }
  std::uint32_t exponent(std::uint32_t gen) const;
  bool is_unit() const { return f_.empty(); }
  int degree(const GeneratorContext& ctx) const;
  std::uint32_t word_length() const;
  // Monomial with one factor of `gen` removed (gen must occur).
  Monomial without_one(std::uint32_t gen) const;
  bool contains_any_below(std::uint32_t bound) const;
  bool only_below(std::uint32_t bound) const;

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return f_ == o.f_; }
  std::size_t hash() const;

 private:
  std::vector<Factor> f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Normal-ordered product; sign is 0 when an odd generator would be squared.
struct SignedMonomial {
  int sign;
  Monomial mono;
};
SignedMonomial multiply(const GeneratorContext& ctx, const Monomial& a, const Monomial& b);

std::string format_monomial(const GeneratorContext& ctx, const Monomial& m);

class AlgElement {
 public:
  AlgElement() = default;
  explicit AlgElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  static AlgElement constant(ContextPtr ctx, const Rational& c);
  static AlgElement generator(ContextPtr ctx, std::size_t gen);
  static AlgElement monomial(ContextPtr ctx, const Monomial& m, const Rational& c = 1);

  const ContextPtr& context() const { return ctx_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  // Degree of a homogeneous nonzero element; nullopt for zero or mixed.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);
  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const Rational& c);
  AlgElement operator-() const;

  bool operator==(const AlgElement& o) const;

  std::string to_string() const;

 private:
  void check_context(const AlgElement& o) const;

  ContextPtr ctx_;
  std::map<Monomial, Rational> terms_;
};

AlgElement operator+(AlgElement a, const AlgElement& b);
AlgElement operator-(AlgElement a, const AlgElement& b);
AlgElement operator*(AlgElement a, const Rational& c);
AlgElement operator*(const Rational& c, AlgElement a);
AlgElement multiply(const AlgElement& x, const AlgElement& y);
AlgElement operator*(const AlgElement& x, const AlgElement& y);
AlgElement power(const AlgElement& x, unsigned e);

// Re-expresses x in `target`, mapping generator i to index remap[i].
AlgElement transport(const AlgElement& x, const ContextPtr& target, std::span<const std::size_t> remap);

class MissingImage : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graded derivation of degree `shift`: θ(xy) = θ(x)y + (−1)^{shift·|x|} xθ(y).
class Derivation {
 public:
  Derivation() = default;
  Derivation(ContextPtr ctx, int shift, std::vector<std::optional<AlgElement>> images);

  const ContextPtr& context() const { return ctx_; }
  int shift() const { return shift_; }
  bool has_image(std::size_t gen) const { return images_[gen].has_value(); }
  const AlgElement& image(std::size_t gen) const;

  AlgElement apply(const Monomial& m) const;
  AlgElement apply(const AlgElement& x) const;

 private:
  ContextPtr ctx_;
  int shift_ = 0;
  std::vector<std::optional<AlgElement>> images_;
};

AlgElement apply_derivation(const Derivation& theta, const AlgElement& x);

// All monomials of degree n, sorted ascending in monomial order.
std::vector<Monomial> degree_basis(const GeneratorContext& ctx, int n, const Budget& budget = {});

}  // namespace rht
