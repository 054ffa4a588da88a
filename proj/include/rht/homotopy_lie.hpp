#pragma once

#include "rht/minimal_model.hpp"

#include <map>
#include <stdexcept>

namespace rht {

class OutOfBound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotNilpotent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Keeps only the word-length-2 part of each differential.
SullivanPresentation quadratic_part(const SullivanPresentation& p);

// ranks[k] = dim V^k for 1 ≤ k ≤ n.
std::map<int, std::size_t> homotopy_ranks(const SullivanPresentation& p, int n);

// Homotopy Lie algebra L_k = (V^{k+1})^# for 0 ≤ k ≤ max_degree, basis dual
// to the generators. The bracket is read off d₁ through
//   ⟨v, s[x,y]⟩ = (−1)^{|y|+1} ⟨d₁v; sx, sy⟩,
//   ⟨v∧w; f, g⟩ = ⟨v,g⟩⟨w,f⟩ + (−1)^{|v||w|} ⟨v,f⟩⟨w,g⟩.
class LieTable {
 public:
  LieTable() = default;
  LieTable(const SullivanPresentation& p, int max_degree);

  int max_degree() const { return max_degree_; }
  std::size_t dim(int k) const;
  // Model generator dual to basis element i of L_k.
  std::size_t generator(int k, std::size_t i) const { return basis_.at(k).at(i); }
  std::optional<std::pair<int, std::size_t>> find(std::string_view generator_name) const;
  std::string label(int k, std::size_t i) const;
  const SullivanPresentation& quadratic() const { return quadratic_; }

  SparseVec bracket_basis(int p, std::size_t i, int q, std::size_t j) const;
  SparseVec bracket(int p, const SparseVec& x, int q, const SparseVec& y) const;
  std::string format(int k, const SparseVec& x) const;

 private:
  SullivanPresentation quadratic_;
  int max_degree_ = -1;
  std::map<int, std::vector<std::size_t>> basis_;
  std::vector<std::pair<int, std::size_t>> position_;  // generator → (k, i)
  std::map<std::tuple<int, std::size_t, int, std::size_t>, SparseVec> table_;
};

// Every violation of antisymmetry or Jacobi on basis triples, as text.
std::vector<std::string> check_lie_axioms(const LieTable& t);

struct WhiteheadProduct {
  int degree = 0;          // k + ℓ − 1
  SparseVec value;         // in L_{k+ℓ−2} coordinates
  bool group_commutator = false;
};
// α ∈ π_k ↔ x ∈ L_{k−1}; [sx, sy]_W = (−1)^{|x|} s[x,y]. For k = ℓ = 1 the
// product is the group commutator αβα⁻¹β⁻¹ computed with the BCH law.
WhiteheadProduct whitehead_product(const LieTable& t, int k, const SparseVec& alpha, int l, const SparseVec& beta);

struct FiltrationReport {
  int k = 0;
  std::vector<std::size_t> v_dims;    // dim V^k_r, r = 0, 1, …
  std::vector<std::size_t> lcs_dims;  // dim L^r_{k−1}, r = 1, 2, …
  std::optional<int> nil_v;           // nullopt: did not stabilize within depth
  std::optional<int> nil_l;
  bool agrees() const { return nil_v && nil_l && *nil_v == *nil_l; }
};
// V^k_0 = V^k ∩ ker δ, V^k_{r+1} = δ^{-1}(V¹ ∧ V^k_r), with δ the V¹∧V^k part
// of d; L^1 = L_{k−1}, L^{r+1} = [L_0, L^r].
FiltrationReport lcs_filtrations(const SullivanPresentation& p, int k, int depth, const LinalgOptions& opts = {});

struct HurewiczReport {
  int k = 0;
  RationalMatrix matrix;  // H^k basis → V^k
  std::size_t rank = 0;
  std::size_t kernel_dim = 0, cokernel_dim = 0;
};
// Linear part ζ of cohomology representatives.
HurewiczReport hurewicz_matrix(const SullivanPresentation& p, int k, const LinalgOptions& opts = {});

// log(exp a · exp b) in L_0, truncated at nilpotency class c.
SparseVec bch_product(const LieTable& t, int c, const SparseVec& a, const SparseVec& b);
// Lower central series class of L_0.
int nilpotency_class(const LieTable& t, int depth = 64);

// Free associative algebra on letters 0, 1, … with rational coefficients.
using Word = std::vector<std::uint8_t>;
using FreeElement = std::map<Word, Rational>;
// log(exp A · exp B) truncated at word length c.
FreeElement bch_series(int c);
// Dynkin projection: a Lie polynomial homogeneous of length n equals 1/n times
// the left-normed bracketing of its words. Returns (coefficient, word) pairs
// to be bracketed left-normed.
std::vector<std::pair<Rational, Word>> dynkin_form(const FreeElement& lie_series);

}  // namespace rht
