#pragma once

#include "rht/linalg.hpp"

#include <memory>
#include <optional>
#include <string>

namespace rht {

// Homogeneous element: coordinates in the degree-n basis of some algebra.
struct Cochain {
  int degree = 0;
  SparseVec coeffs;
};

// Degree-wise view of a cdga: finite-dimensional in each degree, with basis
// indices local to the degree.
class GradedAlgebra {
 public:
  virtual ~GradedAlgebra() = default;

  virtual std::size_t dim(int n) const = 0;
  // d of basis element i of degree n, in the degree n+1 basis.
  virtual SparseVec differential(int n, std::size_t i) const = 0;
  virtual SparseVec product(int p, std::size_t i, int q, std::size_t j) const = 0;
  virtual std::string label(int n, std::size_t i) const = 0;
  virtual int min_degree() const { return 0; }
  // Cochains vanish above this degree, when known.
  virtual std::optional<int> max_degree() const { return std::nullopt; }
  virtual std::optional<std::size_t> unit_index() const = 0;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

SparseVec apply_d(const GradedAlgebra& a, int n, const SparseVec& x);
SparseVec multiply(const GradedAlgebra& a, int p, const SparseVec& x, int q, const SparseVec& y);
Cochain multiply(const GradedAlgebra& a, const Cochain& x, const Cochain& y);
// Matrix of d: A^n → A^{n+1}.
RationalMatrix differential_matrix(const GradedAlgebra& a, int n);
std::string format_vector(const GradedAlgebra& a, int n, const SparseVec& v);
Cochain unit_cochain(const GradedAlgebra& a);

}  // namespace rht
