#pragma once

#include "rht/morphism.hpp"
#include "rht/quotient.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace rht {

struct CohomologyDegree {
  int degree = 0;
  std::size_t cochain_dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t boundary_dim = 0;
  std::vector<SparseVec> representatives;
  std::shared_ptr<const Echelon> boundaries;
  std::shared_ptr<const Echelon> classes;

  std::size_t dim() const { return representatives.size(); }
  // Coordinates of the class of a cocycle in the representative basis.
  SparseVec class_of(const SparseVec& cocycle) const;
  bool is_coboundary(const SparseVec& v) const { return boundaries->contains(v); }
};

CohomologyDegree cohomology_at(const GradedAlgebra& a, int n, const LinalgOptions& opts = {});

struct CohomologyReport {
  int lo = 0, hi = -1;
  std::vector<CohomologyDegree> degrees;
  // Certified: H^k = 0 for every k above this value.
  std::optional<int> vanishes_above;

  const CohomologyDegree& at(int n) const { return degrees.at(static_cast<std::size_t>(n - lo)); }
  std::vector<std::size_t> betti() const;
  bool complete() const { return vanishes_above && *vanishes_above <= hi; }
  int certified_degree() const { return hi; }
};

CohomologyReport cohomology(const GradedAlgebra& a, int lo, int hi, const LinalgOptions& opts = {});

// Degree above which cohomology provably vanishes: the cochain top for
// bounded algebras, the formal dimension for pure Sullivan models with finite
// cohomology, a window argument for quotients of polynomial algebras.
std::optional<int> certified_top(const GradedAlgebra& a);
std::optional<int> certified_top(const SullivanPresentation& p);

struct EulerCharacteristic {
  long long value = 0;
  bool exact = false;
  int window = 0;
};
EulerCharacteristic euler_characteristic(const GradedAlgebra& a, int n_max, const LinalgOptions& opts = {});

// Matrix of H^n(φ) in representative bases.
RationalMatrix cohomology_map(const Morphism& f, int n, const CohomologyDegree& src, const CohomologyDegree& dst);

struct QuasiIsoWitness {
  int degree = 0;
  std::size_t source_dim = 0, target_dim = 0, rank = 0;
  bool iso() const { return source_dim == target_dim && rank == source_dim; }
  bool injective() const { return rank == source_dim; }
};

struct QuasiIsoReport {
  bool ok = true;
  std::vector<QuasiIsoWitness> degrees;
  std::optional<int> first_failure;
};

QuasiIsoReport is_quasi_iso(const Morphism& f, int n_max, const LinalgOptions& opts = {});

}  // namespace rht
