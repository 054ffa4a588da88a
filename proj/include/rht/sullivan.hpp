#pragma once

#include "rht/algebra.hpp"
#include "rht/graded.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace rht {

// Free cdga (ΛV, d) given by generator degrees and the images d(v).
class SullivanPresentation {
 public:
  SullivanPresentation();
  SullivanPresentation(ContextPtr ctx, std::vector<AlgElement> d);

  const ContextPtr& context() const { return ctx_; }
  std::size_t size() const { return d_.size(); }
  const AlgElement& d(std::size_t gen) const { return d_[gen]; }
  const std::vector<AlgElement>& differentials() const { return d_; }
  AlgElement generator(std::size_t gen) const { return AlgElement::generator(ctx_, gen); }
  AlgElement generator(std::string_view name) const;
  Derivation derivation() const;
  AlgElement apply_d(const AlgElement& x) const;

  bool operator==(const SullivanPresentation& o) const;

 private:
  ContextPtr ctx_;
  std::vector<AlgElement> d_;
};

// Tensor product; generators of b whose names clash get a numeric suffix.
SullivanPresentation tensor(const SullivanPresentation& a, const SullivanPresentation& b);
// Appends generators (with their differentials written in the new context).
SullivanPresentation with_generators(const SullivanPresentation& p, const std::vector<Generator>& gens,
                                     const std::vector<AlgElement>& d_in_new_context);
// Same algebra re-expressed in a context with extra generators appended.
AlgElement widen(const AlgElement& x, const ContextPtr& wider);
std::string unique_name(const GeneratorContext& ctx, std::string base);

class SullivanAlgebra : public GradedAlgebra {
 public:
  explicit SullivanAlgebra(SullivanPresentation p, Budget budget = {});

  const SullivanPresentation& presentation() const { return p_; }
  const ContextPtr& context() const { return p_.context(); }
  const Budget& budget() const { return budget_; }
  const std::vector<Monomial>& basis(int n) const;
  std::optional<std::size_t> index_of(int n, const Monomial& m) const;
  SparseVec to_vector(int n, const AlgElement& x) const;
  AlgElement to_element(int n, const SparseVec& v) const;
  Cochain to_cochain(const AlgElement& x) const;

  std::size_t dim(int n) const override;
  SparseVec differential(int n, std::size_t i) const override;
  SparseVec product(int p, std::size_t i, int q, std::size_t j) const override;
  std::string label(int n, std::size_t i) const override;
  std::optional<int> max_degree() const override;
  std::optional<std::size_t> unit_index() const override { return 0; }

 private:
  struct DegreeData {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  };
  const DegreeData& data(int n) const;

  SullivanPresentation p_;
  Budget budget_;
  Derivation d_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<DegreeData>> cache_;
};

using SullivanPtr = std::shared_ptr<const SullivanAlgebra>;
SullivanPtr make_sullivan(SullivanPresentation p, Budget budget = {});

}  // namespace rht
