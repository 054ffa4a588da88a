#pragma once

#include "rht/algebra.hpp"
#include "rht/graded.hpp"

#include <map>
#include <mutex>

namespace rht {

// A ⊗ B with (a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd and d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db.
class TensorAlgebra : public GradedAlgebra {
 public:
  struct Term {
    int p;
    std::size_t i;
    int q;
    std::size_t j;
    auto operator<=>(const Term&) const = default;
  };

  TensorAlgebra(AlgebraPtr a, AlgebraPtr b);

  const GradedAlgebra& left() const { return *a_; }
  const GradedAlgebra& right() const { return *b_; }
  const std::vector<Term>& basis(int n) const;
  std::size_t index_of(int n, const Term& t) const;
  // x ⊗ y for homogeneous x ∈ A^p, y ∈ B^q.
  SparseVec tensor(int p, const SparseVec& x, int q, const SparseVec& y) const;

  std::size_t dim(int n) const override { return basis(n).size(); }
  SparseVec differential(int n, std::size_t i) const override;
  SparseVec product(int p, std::size_t i, int q, std::size_t j) const override;
  std::string label(int n, std::size_t i) const override;
  int min_degree() const override { return a_->min_degree() + b_->min_degree(); }
  std::optional<int> max_degree() const override;
  std::optional<std::size_t> unit_index() const override;

 private:
  struct DegreeData {
    std::vector<Term> basis;
    std::map<Term, std::size_t> index;
  };
  const DegreeData& data(int n) const;

  AlgebraPtr a_, b_;
  mutable std::recursive_mutex mu_;
  mutable std::map<int, std::unique_ptr<DegreeData>> cache_;
};

// Quotient of an ambient algebra by the ideal generated by homogeneous
// elements, computed degree-wise: the quotient basis is the set of ambient
// basis elements that are not pivots of the ideal span.
class QuotientAlgebra : public GradedAlgebra {
 public:
  QuotientAlgebra(AlgebraPtr ambient, std::vector<Cochain> ideal, LinalgOptions opts = {});

  const GradedAlgebra& ambient() const { return *ambient_; }
  const AlgebraPtr& ambient_ptr() const { return ambient_; }
  const std::vector<Cochain>& ideal_generators() const { return ideal_; }
  const Echelon& ideal_span(int n) const;
  bool ideal_contains(int n, const SparseVec& ambient_vec) const;
  SparseVec project(int n, const SparseVec& ambient_vec) const;
  std::size_t lift_index(int n, std::size_t i) const;
  SparseVec lift(int n, const SparseVec& v) const;

  std::size_t dim(int n) const override;
  SparseVec differential(int n, std::size_t i) const override;
  SparseVec product(int p, std::size_t i, int q, std::size_t j) const override;
  std::string label(int n, std::size_t i) const override;
  int min_degree() const override { return ambient_->min_degree(); }
  std::optional<int> max_degree() const override { return ambient_->max_degree(); }
  std::optional<std::size_t> unit_index() const override;

 private:
  struct DegreeData {
    Echelon span;
    std::vector<std::size_t> standard;        // quotient index -> ambient index
    std::vector<std::int64_t> position;       // ambient index -> quotient index or -1
  };
  const DegreeData& data(int n) const;

  AlgebraPtr ambient_;
  std::vector<Cochain> ideal_;
  LinalgOptions opts_;
  mutable std::recursive_mutex mu_;
  mutable std::map<int, std::unique_ptr<DegreeData>> cache_;
};

using QuotientPtr = std::shared_ptr<const QuotientAlgebra>;

// Term b ⊗ m of B ⊗ ΛX.
struct MixedTerm {
  int base_degree = 0;
  std::size_t base_index = 0;
  Monomial mono;
  auto operator<=>(const MixedTerm&) const = default;
  bool operator==(const MixedTerm&) const = default;
};
using MixedElement = std::map<MixedTerm, Rational>;

// Relative algebra (B ⊗ ΛX, d) over a cdga B with d(x) ∈ B ⊗ ΛX.
class RelativeAlgebra : public GradedAlgebra {
 public:
  RelativeAlgebra(AlgebraPtr base, ContextPtr fiber, std::vector<MixedElement> d_fiber, Budget budget = {});

  const GradedAlgebra& base() const { return *base_; }
  const ContextPtr& fiber_context() const { return ctx_; }
  const std::vector<MixedElement>& fiber_differentials() const { return d_fiber_; }
  const std::vector<MixedTerm>& basis(int n) const;
  std::optional<std::size_t> index_of(int n, const MixedTerm& t) const;
  SparseVec to_vector(int n, const MixedElement& x) const;

  MixedElement base_element(int degree, const SparseVec& v) const;
  MixedElement fiber_generator(std::size_t g) const;
  MixedElement mul(const MixedElement& x, const MixedElement& y) const;
  MixedElement d(const MixedElement& x) const;

  std::size_t dim(int n) const override { return basis(n).size(); }
  SparseVec differential(int n, std::size_t i) const override;
  SparseVec product(int p, std::size_t i, int q, std::size_t j) const override;
  std::string label(int n, std::size_t i) const override;
  int min_degree() const override { return base_->min_degree(); }
  std::optional<int> max_degree() const override;
  std::optional<std::size_t> unit_index() const override;

 private:
  struct DegreeData {
    std::vector<MixedTerm> basis;
    std::map<MixedTerm, std::size_t> index;
  };
  const DegreeData& data(int n) const;
  MixedElement d_monomial(const Monomial& m) const;
  int base_top() const;

  AlgebraPtr base_;
  ContextPtr ctx_;
  std::vector<MixedElement> d_fiber_;
  Budget budget_;
  mutable std::recursive_mutex mu_;
  mutable std::map<int, std::unique_ptr<DegreeData>> cache_;
  mutable std::map<Monomial, MixedElement> d_cache_;
};

void add_to(MixedElement& x, const MixedTerm& t, const Rational& c);

}  // namespace rht
