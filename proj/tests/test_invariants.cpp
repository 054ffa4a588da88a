#include "doctest.h"
#include "oracles.hpp"
#include "rht/invariants.hpp"

#include <functional>

using namespace rht;
using namespace rht::testing;

namespace {

SullivanPresentation sphere(int n) {
  if (n % 2) {
    auto c = make_context({{"u", n}});
    return SullivanPresentation(c, {AlgElement(c)});
  }
  auto c = make_context({{"a", n}, {"b", 2 * n - 1}});
  auto a = AlgElement::generator(c, 0);
  return SullivanPresentation(c, {AlgElement(c), a * a});
}

SullivanPresentation cp(int n) {
  auto c = make_context({{"x", 2}, {"y", 2 * n + 1}});
  auto x = AlgElement::generator(c, 0);
  return SullivanPresentation(c, {AlgElement(c), power(x, static_cast<unsigned>(n + 1))});
}

FinitePtr truncated(int deg, int h) {
  FiniteCDGA::Builder b;
  std::vector<FiniteCDGA::Ref> pw;
  for (int k = 0; k <= h; ++k) pw.push_back(b.add(k * deg, k == 0 ? "1" : "x^" + std::to_string(k)));
  b.set_unit(pw[0]);
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= h; ++j)
      if (i + j <= h) b.set_product(pw[i], pw[j], sv::unit(0));
  return std::make_shared<const FiniteCDGA>(b.build());
}

FinitePtr finite_tensor(const FinitePtr& a, const FinitePtr& b) {
  TensorAlgebra t(a, b);
  return std::make_shared<const FiniteCDGA>(FiniteCDGA::from_view(t, 0, a->top_degree() + b->top_degree()));
}

FinitePtr torus(int n) {
  FinitePtr t = truncated(1, 1);
  for (int i = 1; i < n; ++i) t = finite_tensor(t, truncated(1, 1));
  return t;
}

}  // namespace

TEST_CASE("cohomology algebra of the 2-sphere model") {
  auto H = cohomology_algebra(*make_sullivan(sphere(2)), 0, 6);
  CHECK(H->dim(0) == 1);
  CHECK(H->dim(2) == 1);
  CHECK(H->total_dim() == 2);
  CHECK(satisfies_poincare_duality(*H));
  CHECK(satisfies_poincare_duality(*truncated(2, 3)));
  FiniteCDGA::Builder b;
  b.set_unit(b.add(0, "1"));
  b.add(2, "e0");
  b.add(2, "e1");
  CHECK_FALSE(satisfies_poincare_duality(b.build()));
}

TEST_CASE("Toomer invariant of spheres and projective spaces") {
  for (int n : {2, 3, 4, 5}) CHECK(toomer_invariant(sphere(n)).e == 1);
  for (int n = 1; n <= 4; ++n) {
    auto t = toomer_invariant(cp(n));
    CHECK(t.e == n);
    CHECK(t.exact);
  }
  CHECK(toomer_invariant(SullivanPresentation()).e == 0);
}

TEST_CASE("category bounds") {
  auto c = cat_bounds(cp(3));
  CHECK(c.lower == 3);
  CHECK(c.upper == 6);
  CHECK(c.poincare_duality);
  CHECK(c.exact == 3);
  auto s = cat_bounds(sphere(3));
  CHECK(s.lower == 1);
  CHECK(s.exact == 1);
  auto p = cat_bounds(tensor(sphere(2), sphere(3)));
  CHECK(p.exact == 2);
  CHECK(*p.lower <= *p.upper);
}

TEST_CASE("Toomer invariant is additive on products") {
  std::vector<std::pair<SullivanPresentation, SullivanPresentation>> pairs{
      {sphere(2), sphere(3)}, {sphere(2), sphere(2)}, {cp(2), sphere(3)}, {sphere(3), sphere(5)}, {cp(2), cp(2)}};
  for (const auto& [a, b] : pairs) {
    auto ea = toomer_invariant(a).e, eb = toomer_invariant(b).e, eab = toomer_invariant(tensor(a, b)).e;
    REQUIRE(ea);
    REQUIRE(eb);
    CHECK(eab == *ea + *eb);
  }
}

TEST_CASE("Massey product detects the non-formal example") {
  auto c = make_context({{"u", 1}, {"v", 1}, {"w", 1}});
  auto u = AlgElement::generator(c, 0), v = AlgElement::generator(c, 1), w = AlgElement::generator(c, 2);
  auto S = make_sullivan(SullivanPresentation(c, {AlgElement(c), AlgElement(c), u * v}));
  auto r = massey_triple(*S, S->to_cochain(u), S->to_cochain(v), S->to_cochain(v));
  REQUIRE(r.defined);
  CHECK(r.nontrivial);
  CHECK(S->to_element(2, r.representative.coeffs) == w * v);
  for (const auto& z : r.indeterminacy) CHECK(apply_d(*S, 2, z).empty());
  CHECK(apply_d(*S, 2, r.representative.coeffs).empty());

  auto undefined = massey_triple(*S, S->to_cochain(u), S->to_cochain(w), S->to_cochain(v));
  CHECK_FALSE(undefined.defined);
}

TEST_CASE("Massey product is well defined modulo indeterminacy") {
  std::mt19937 rng(17);
  auto c = make_context({{"u", 1}, {"v", 1}, {"w", 1}});
  auto u = AlgElement::generator(c, 0), v = AlgElement::generator(c, 1), w = AlgElement::generator(c, 2);
  auto S = make_sullivan(SullivanPresentation(c, {AlgElement(c), AlgElement(c), u * v}));
  auto a = S->to_cochain(u), b = S->to_cochain(v), cc = S->to_cochain(v);
  auto base = massey_triple(*S, a, b, cc);
  auto H2 = cohomology_at(*S, 2);
  Echelon ind(H2.dim());
  for (const auto& z : base.indeterminacy) ind.insert(H2.class_of(z));
  for (int trial = 0; trial < 30; ++trial) {
    AlgElement zx = u * testing::random_rational(rng) + v * testing::random_rational(rng);
    AlgElement zy = u * testing::random_rational(rng) + v * testing::random_rational(rng);
    auto x = S->to_vector(1, w + zx);
    auto y = S->to_vector(1, zy);
    auto r = massey_triple(*S, a, b, cc, x, y);
    REQUIRE(r.defined);
    CHECK(apply_d(*S, 2, r.representative.coeffs).empty());
    CHECK(ind.contains(sv::sub(r.class_coords, base.class_coords)));
  }
}

TEST_CASE("Massey products vanish on the formal 2-sphere") {
  auto H = truncated(2, 1);
  Cochain a{2, sv::unit(0)}, zero{2, {}};
  auto r = massey_triple(*H, a, a, a);
  REQUIRE(r.defined);
  CHECK_FALSE(r.nontrivial);
  auto z = massey_triple(*H, a, zero, a);
  REQUIRE(z.defined);
  CHECK(z.representative.coeffs.empty());
}

TEST_CASE("elliptic degree examples") {
  CHECK(elliptic_degrees_check({{}, {2, 3}}).ok);
  CHECK(elliptic_degrees_check({{1}, {3}}).ok);
  auto f = elliptic_degrees_check({{1}, {}});
  CHECK_FALSE(f.ok);
  CHECK(f.witness == std::vector<std::size_t>{0});
  // b = a alone is not allowed (Σ k ≥ 2).
  CHECK_FALSE(elliptic_degrees_check({{2}, {2}}).ok);
}

TEST_CASE("elliptic check agrees with brute force and is monotone") {
  auto seqs = all_sequences(10);
  CHECK(seqs.size() > 100);
  for (const auto& s : seqs) {
    bool ok = elliptic_degrees_check(s).ok;
    CHECK(ok == elliptic_oracle(s));
    if (ok)
      for (int b = 1; b <= 6; ++b) {
        auto t = s;
        t.odds.push_back(b);
        CHECK(elliptic_degrees_check(t).ok);
      }
  }
}

TEST_CASE("trichotomy evidence") {
  MinimalModelOptions o;
  o.max_degree = 12;
  auto r = minimal_model(truncated(2, 3), o);
  auto t = trichotomy_report(r, 12);
  CHECK(t.evidence == GrowthEvidence::Elliptic);
  CHECK(t.chi_pi == 0);

  FiniteCDGA::Builder b;
  b.set_unit(b.add(0, "1"));
  b.add(2, "e0");
  b.add(2, "e1");
  o.max_degree = 8;
  auto w = minimal_model(std::make_shared<const FiniteCDGA>(b.build()), o);
  auto tw = trichotomy_report(w, 8);
  CHECK(tw.evidence == GrowthEvidence::Hyperbolic);
  CHECK(tw.alpha_estimate > 0);

  auto pt = trichotomy_report(std::map<int, std::size_t>{}, true, 8);
  CHECK(pt.evidence == GrowthEvidence::Elliptic);
  CHECK(pt.chi_pi == 0);
}

TEST_CASE("TC cup length examples") {
  CHECK(tc_cup_length(*truncated(2, 1)) == 2);
  CHECK(tc_cup_length(*truncated(3, 1)) == 1);
  FiniteCDGA::Builder b;
  b.set_unit(b.add(0, "1"));
  CHECK(tc_cup_length(b.build()) == 0);
  CHECK(tc_cup_length(*truncated(2, 2)) == 4);
}

TEST_CASE("TC cup length matches brute force on small cohomologies") {
  std::vector<FinitePtr> algebras{truncated(2, 1), truncated(3, 1), truncated(4, 1), truncated(2, 2), truncated(2, 3),
                                  torus(2), finite_tensor(truncated(2, 1), truncated(3, 1))};
  for (const auto& h : algebras) CHECK(tc_cup_length(*h) == brute_force_tc(*h));
}

TEST_CASE("loop space homology by PBW") {
  // S³: L = one class in degree 2.
  auto s3 = loop_homology_dims({{2, 1}}, 8);
  for (int k = 0; k <= 8; ++k) CHECK(s3[static_cast<std::size_t>(k)] == (k % 2 == 0 ? 1 : 0));
  auto s2 = loop_homology_dims(lie_dims_from_model(sphere(2), 12), 12);
  for (const auto& d : s2) CHECK(d == 1);
  CHECK_THROWS_AS(loop_homology_dims({{0, 3}}, 4), UnsupportedInput);

  // Monomial count of the PBW basis x^ε y^m with |x| = 1, |y| = 2.
  for (int k = 0; k <= 12; ++k) {
    int count = 0;
    for (int e = 0; e <= 1; ++e)
      for (int m = 0; e + 2 * m <= k; ++m)
        if (e + 2 * m == k) ++count;
    CHECK(s2[static_cast<std::size_t>(k)] == count);
  }

  FiniteCDGA::Builder b;
  b.set_unit(b.add(0, "1"));
  b.add(2, "e0");
  b.add(2, "e1");
  MinimalModelOptions o;
  o.max_degree = 8;
  auto w = minimal_model(std::make_shared<const FiniteCDGA>(b.build()), o);
  auto dims = loop_homology_dims(lie_dims_from_model(w.model, 7), 7);
  for (int k = 0; k <= 7; ++k) CHECK(dims[static_cast<std::size_t>(k)] == mpz_class(1) << k);
}

TEST_CASE("loop homology matches the acyclic closure fiber") {
  auto ac = acyclic_closure(sphere(2), 8);
  auto fiber = fiber_model(ac.ext);
  auto dims = loop_homology_dims(lie_dims_from_model(sphere(2), 8), 8);
  for (int k = 0; k <= 8; ++k) CHECK(degree_basis(*fiber.context(), k).size() == dims[static_cast<std::size_t>(k)]);
}
