#pragma once

#include "rht/invariants.hpp"

#include <variant>

namespace rht {

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- catalog ------------------------------------------------------------

SullivanPresentation sphere_model(int n);
// (Λ(x₂, y_{2n+1}), dy = x^{n+1})
SullivanPresentation cp_model(int n);
// K(ℤ, n): a single generator of degree n with zero differential.
SullivanPresentation kz_model(int n);
// n generators of degree 1, zero differential.
SullivanPresentation torus_model(int n);
// ℚ[x]/(x^{h+1}) with |x| = degree.
FinitePtr truncated_polynomial(int degree, int height);
// A ⊕_ℚ B: shared unit, positive parts side by side, mixed products zero.
FinitePtr wedge_cohomology(const FiniteCDGA& a, const FiniteCDGA& b);
FinitePtr finite_tensor(const FinitePtr& a, const FinitePtr& b);

using CatalogModel = std::variant<SullivanPresentation, FinitePtr>;

class UnknownCatalogEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Expressions such as "sphere(2)", "cp(3)", "kz(4)", "torus(2)",
// "truncated_poly(2,3)", "product(sphere(2),sphere(3))",
// "wedge_cohomology(sphere(2),sphere(2))".
CatalogModel catalog(std::string_view expr);
CatalogModel catalog(std::string_view name, const std::vector<std::string>& params);
// Cohomology algebra of a catalog model; throws when it is not certified finite.
FinitePtr catalog_cohomology(const CatalogModel& m);

// ---- homogeneous spaces and biquotients -----------------------------------

// Generators of H(BH) for odd primitive generators V_H: same names, degree + 1.
ContextPtr classifying_context(const std::vector<Generator>& odd_generators);

// (ΛBH ⊗ ΛV_G, d) with d = 0 on BH and d(x) = φ(x) ∈ ΛBH. φ is written in
// classifying_context(v_h).
SullivanPresentation homogeneous_space_model(const std::vector<Generator>& v_g, const std::vector<Generator>& v_h,
                                             const std::vector<AlgElement>& phi);
// (ΛBK ⊗ ΛBH ⊗ ΛV_G, d) with d(x) = f(x) − g(x), f in ΛBH and g in ΛBK.
SullivanPresentation biquotient_model(const std::vector<Generator>& v_g, const std::vector<Generator>& v_h,
                                      const std::vector<Generator>& v_k, const std::vector<AlgElement>& f,
                                      const std::vector<AlgElement>& g);

// ---- free loop space ------------------------------------------------------

// (ΛV ⊗ ΛsV, D) with D(sv) = −s(dv), s the degree −1 derivation v ↦ sv.
// Suspended generators are appended in order and named "s" + name.
SullivanPresentation free_loop_model(const SullivanPresentation& p);

// ---- holonomy -------------------------------------------------------------

struct HolonomyBlock {
  std::size_t base_generator = 0;
  int degree = 0;         // source degree in H(ΛZ, d̄)
  RationalMatrix matrix;  // H^degree → H^{degree + 1 − |w|} in representative bases
};

struct HolonomyReport {
  SullivanPresentation fiber;
  std::map<int, CohomologyDegree> fiber_cohomology;
  std::vector<HolonomyBlock> blocks;
  int window = 0;
  bool nilpotent = true;  // every degree-preserving block is nilpotent
};

// θ̄_i read off the W-linear part of d on fiber representatives, degrees ≤ N.
HolonomyReport holonomy_representation(const LambdaExtension& ext, int max_degree, const LinalgOptions& opts = {},
                                       Budget budget = {});

// ---- mapping spaces -------------------------------------------------------

struct MappingSpaceResult {
  int n = 0;
  std::size_t dimension = 0;
  std::size_t cycles = 0, boundaries = 0;
  // (generator of the source model, degree of its image) for Der_n.
  std::vector<std::pair<std::size_t, int>> contributing;
};

// H_n of the φ-derivation complex Der_φ(ΛV, ΛW), Dθ = dθ − (−1)^n θd.
// φ(v) is given in W's context for each generator v of V.
MappingSpaceResult mapping_space_pi(const SullivanPresentation& v, const SullivanPresentation& w,
                                    const std::vector<AlgElement>& phi, int n, const LinalgOptions& opts = {},
                                    Budget budget = {});

// ---- Poincaré duality models ----------------------------------------------

class DegeneratePairing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PDAlgebra {
  FinitePtr algebra;
  int dimension = 0;
  SparseVec orientation;  // ε on A^m, in the degree-m basis
  // Basis a_i (all degrees) and the dual basis a_i′ with ε(a_i a_j′) = δ_ij.
  std::vector<Cochain> basis;
  std::vector<Cochain> dual;
};

// ε(ω) = 1 and ε vanishes on d(A^{m−1}) and on the other basis elements of A^m.
PDAlgebra make_pd(FinitePtr a, int m, FiniteCDGA::Ref omega, const LinalgOptions& opts = {});
// ΛV / (ΛV)^{>m} with ω the given monomial.
PDAlgebra make_pd(const SullivanPresentation& p, int m, const AlgElement& omega, const LinalgOptions& opts = {});

// Σ (−1)^{|a_i|} a_i ⊗ a_i′ in A ⊗ A.
struct DiagonalClass {
  std::shared_ptr<const TensorAlgebra> square;
  Cochain value;
};
DiagonalClass diagonal_class(const PDAlgebra& a);

struct ConfigSpaceModel {
  std::shared_ptr<const QuotientAlgebra> quotient;
  std::shared_ptr<const RelativeAlgebra> ambient;  // A^{⊗k} ⊗ Λ(x_ij)
  std::vector<std::pair<int, int>> pairs;          // x_ij, i < j, 1-based
  int dimension = 0;                               // m, with |x_ij| = m − 1
  int top_degree = 0;
  Cochain arnold_relation(int i, int j, int k) const;  // in the ambient
};

// F(A, k) with dx_ij = p_ij(D_A). k is capped by max_k.
ConfigSpaceModel config_space_model(const PDAlgebra& a, int k, int max_k = 3, const LinalgOptions& opts = {});

// ---- subspace arrangements ------------------------------------------------

struct SubspaceArrangement {
  int ambient = 0;
  // Each subspace is the common zero set of its rows.
  std::vector<std::vector<std::vector<Rational>>> subspaces;
};

struct IntersectionLattice {
  std::vector<int> codim;  // by subset bitmask
  struct Flat {
    int codim = 0;
    std::vector<std::uint32_t> subsets;  // masks whose intersection is this flat
  };
  std::vector<Flat> flats;  // distinct intersections, sorted by codim
};
IntersectionLattice intersection_lattice(const SubspaceArrangement& arr);

// Basis: subsets σ in degree 2·codim(∩σ) − |σ|, labelled by their elements.
FinitePtr arrangement_complex(const SubspaceArrangement& arr);

}  // namespace rht
