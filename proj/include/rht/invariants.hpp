#pragma once

#include "rht/homotopy_lie.hpp"

#include <gmpxx.h>

namespace rht {

// Cohomology algebra H(A) in degrees lo..hi as a finite cdga with zero
// differential; basis element i of degree n is the i-th representative.
FinitePtr cohomology_algebra(const GradedAlgebra& a, int lo, int hi, const LinalgOptions& opts = {});

// Top pairing H^k × H^{m−k} → H^m ≅ ℚ nondegenerate, m the top degree.
bool satisfies_poincare_duality(const FiniteCDGA& h);

struct ToomerResult {
  std::optional<int> e;  // nullopt: no m ≤ word_bound works in the window
  int word_bound = 0;
  int window = 0;
  bool exact = false;    // H^{>window} = 0 is certified
};
// Least m with H(ΛV) → H(ΛV/Λ^{>m}V) injective in degrees ≤ window.
// Negative arguments select the defaults (cohomological dimension when it is
// certified, else 12 words and the budget degree).
ToomerResult toomer_invariant(const SullivanPresentation& p, int word_bound = -1, int window = -1,
                              const LinalgOptions& opts = {}, Budget budget = {});

struct CatBounds {
  std::optional<int> lower;  // e
  std::optional<int> upper;  // n with H^{>n} = 0
  bool poincare_duality = false;
  std::optional<int> exact;  // e = cat when H satisfies Poincaré duality
  int window = 0;
};
CatBounds cat_bounds(const SullivanPresentation& p, int window = -1, const LinalgOptions& opts = {},
                     Budget budget = {});

struct MasseyResult {
  bool defined = false;
  std::string reason;                // why undefined
  Cochain representative;            // x·c + (−1)^{|a|+1} a·y
  std::vector<SparseVec> indeterminacy;  // cochains spanning [a]·H + H·[c]
  SparseVec class_coords;            // representative's class in H
  bool nontrivial = false;
};
// With dx = a·b and dy = b·c. The primitives are the first solutions unless
// given explicitly.
MasseyResult massey_triple(const GradedAlgebra& A, const Cochain& a, const Cochain& b, const Cochain& c,
                           const LinalgOptions& opts = {});
MasseyResult massey_triple(const GradedAlgebra& A, const Cochain& a, const Cochain& b, const Cochain& c,
                           const SparseVec& x, const SparseVec& y, const LinalgOptions& opts = {});

struct DegreeSequence {
  std::vector<int> evens;  // a_i: generators of degree 2a_i
  std::vector<int> odds;   // b_j: generators of degree 2b_j − 1
};
struct EllipticCheck {
  bool ok = true;
  std::vector<std::size_t> witness;  // indices into evens of a failing subsequence
};
// For every sub-multiset of s evens, at least s of the b_j are combinations
// Σ k_λ a_{j_λ} over it with k_λ ≥ 0 and Σ k_λ ≥ 2. Each subsequence is
// counted independently.
EllipticCheck elliptic_degrees_check(const DegreeSequence& s);
bool is_combination(int b, const std::vector<int>& a);

enum class GrowthEvidence { Elliptic, Hyperbolic, Inconclusive };
const char* to_string(GrowthEvidence g);

struct TrichotomyReport {
  std::map<int, std::size_t> ranks;
  long long chi_pi = 0;       // dim V^even − dim V^odd in the window
  double alpha_estimate = 0;  // max log(rk_k)/k over the window
  GrowthEvidence evidence = GrowthEvidence::Inconclusive;
  bool cohomology_finite = false;
  int window = 0;
};
TrichotomyReport trichotomy_report(const MinimalModelResult& m, int window);
TrichotomyReport trichotomy_report(const std::map<int, std::size_t>& ranks, bool cohomology_finite, int window);

// c_H: longest nonzero product of elements of ker(μ : H ⊗ H → H).
int tc_cup_length(const FiniteCDGA& h);

// Coefficients of Π_{odd k}(1+t^k)^{l_k} / Π_{even k}(1−t^k)^{l_k} up to t^n.
std::vector<mpz_class> loop_homology_dims(const std::map<int, std::size_t>& lie_dims, int n);
// l_k = dim V^{k+1}.
std::map<int, std::size_t> lie_dims_from_model(const SullivanPresentation& p, int n);

}  // namespace rht
