#pragma once

#include "rht/finite.hpp"
#include "rht/sullivan.hpp"

#include <functional>
#include <map>
#include <memory>

namespace rht {

// Degree-0 cdga map. Sullivan sources are given on generators and extended
// multiplicatively; other sources are given by basis images per degree.
class Morphism {
 public:
  Morphism() = default;
  static Morphism on_generators(SullivanPtr source, AlgebraPtr target, std::vector<SparseVec> images);
  static Morphism on_basis(AlgebraPtr source, AlgebraPtr target, std::map<int, std::vector<SparseVec>> images);
  static Morphism identity(AlgebraPtr a);

  const GradedAlgebra& source() const { return *source_; }
  const GradedAlgebra& target() const { return *target_; }
  const AlgebraPtr& source_ptr() const { return source_; }
  const AlgebraPtr& target_ptr() const { return target_; }
  bool on_generators_form() const { return static_cast<bool>(sullivan_); }
  const SullivanPtr& sullivan_source() const { return sullivan_; }
  const std::vector<SparseVec>& generator_images() const { return gen_images_; }

  SparseVec apply_basis(int n, std::size_t i) const;
  SparseVec apply(int n, const SparseVec& x) const;
  // Image of an element of a Sullivan source written as a polynomial.
  Cochain apply(const AlgElement& x) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<Monomial, SparseVec> monomial_images;
  };
  SparseVec image_of_monomial(const Monomial& m) const;

  AlgebraPtr source_, target_;
  SullivanPtr sullivan_;
  std::vector<SparseVec> gen_images_;
  std::map<int, std::vector<SparseVec>> basis_images_;
  bool identity_ = false;
  std::shared_ptr<Cache> cache_;
};

}  // namespace rht
