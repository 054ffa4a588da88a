#include "rht/invariants.hpp"

namespace rht {

namespace {

std::optional<SparseVec> primitive(const GradedAlgebra& A, int n, const SparseVec& z, const LinalgOptions& opts) {
  // z ∈ A^n; find w ∈ A^{n−1} with dw = z.
  std::vector<SparseVec> t{z};
  auto sol = solve_linear(differential_matrix(A, n - 1), t, opts);
  return sol.solutions[0];
}

}  // namespace

MasseyResult massey_triple(const GradedAlgebra& A, const Cochain& a, const Cochain& b, const Cochain& c,
                           const LinalgOptions& opts) {
  MasseyResult r;
  for (const auto* x : {&a, &b, &c})
    if (!apply_d(A, x->degree, x->coeffs).empty()) {
      r.reason = "arguments must be cocycles";
      return r;
    }
  int ab = a.degree + b.degree, bc = b.degree + c.degree;
  auto x = primitive(A, ab, multiply(A, a.degree, a.coeffs, b.degree, b.coeffs), opts);
  auto y = primitive(A, bc, multiply(A, b.degree, b.coeffs, c.degree, c.coeffs), opts);
  if (!x || !y) {
    r.reason = !x ? "[a][b] is nonzero in cohomology" : "[b][c] is nonzero in cohomology";
    return r;
  }
  return massey_triple(A, a, b, c, *x, *y, opts);
}

MasseyResult massey_triple(const GradedAlgebra& A, const Cochain& a, const Cochain& b, const Cochain& c,
                           const SparseVec& x, const SparseVec& y, const LinalgOptions& opts) {
  MasseyResult r;
  int ab = a.degree + b.degree, bc = b.degree + c.degree;
  if (apply_d(A, ab - 1, x) != multiply(A, a.degree, a.coeffs, b.degree, b.coeffs) ||
      apply_d(A, bc - 1, y) != multiply(A, b.degree, b.coeffs, c.degree, c.coeffs)) {
    r.reason = "given primitives do not bound a·b and b·c";
    return r;
  }
  r.defined = true;
  int n = ab + c.degree - 1;
  Rational sign = (a.degree + 1) % 2 ? -1 : 1;
  SparseVec rep = multiply(A, ab - 1, x, c.degree, c.coeffs);
  rep = sv::axpy(rep, sign, multiply(A, a.degree, a.coeffs, bc - 1, y));
  r.representative = {n, rep};

  auto Hn = cohomology_at(A, n, opts);
  auto Hq = cohomology_at(A, bc - 1, opts);
  auto Hp = cohomology_at(A, ab - 1, opts);
  for (const auto& h : Hq.representatives) r.indeterminacy.push_back(multiply(A, a.degree, a.coeffs, bc - 1, h));
  for (const auto& h : Hp.representatives) r.indeterminacy.push_back(multiply(A, ab - 1, h, c.degree, c.coeffs));
  r.class_coords = Hn.class_of(rep);
  Echelon ind(Hn.dim(), opts);
  for (const auto& v : r.indeterminacy) ind.insert(Hn.class_of(v));
  r.nontrivial = !ind.contains(r.class_coords);
  return r;
}

}  // namespace rht
