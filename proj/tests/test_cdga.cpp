#include "doctest.h"
#include "helpers.hpp"
#include "rht/cdga.hpp"

using namespace rht;

namespace {

SullivanPresentation s2_model() {
  auto c = make_context({{"a", 2}, {"b", 3}});
  auto a = AlgElement::generator(c, 0);
  return SullivanPresentation(c, {AlgElement(c), a * a});
}

SullivanPresentation nonformal() {
  auto c = make_context({{"u", 1}, {"v", 1}, {"w", 1}});
  auto u = AlgElement::generator(c, 0), v = AlgElement::generator(c, 1);
  return SullivanPresentation(c, {AlgElement(c), AlgElement(c), u * v});
}

FinitePtr sphere_cohomology(int n) {
  FiniteCDGA::Builder b;
  auto one = b.add(0, "1");
  b.add(n, "x");
  b.set_unit(one);
  return std::make_shared<const FiniteCDGA>(b.build());
}

}  // namespace

TEST_CASE("validate accepts the 2-sphere model") { CHECK(validate(s2_model()).ok()); }

TEST_CASE("validate flags a differential of the wrong degree") {
  auto c = make_context({{"a", 2}, {"b", 3}});
  SullivanPresentation bad(c, {AlgElement(c), AlgElement::generator(c, 0)});
  auto r = validate(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].kind == "degree");
}

TEST_CASE("validate flags d squared nonzero") {
  auto c = make_context({{"x", 2}, {"y", 3}, {"z", 4}});
  auto x = AlgElement::generator(c, 0), y = AlgElement::generator(c, 1);
  // dx = 0 would be fine; make dy = x^2 and dz = y*? impossible in degree; use dx chain instead
  SullivanPresentation bad(c, {y, AlgElement(c), AlgElement(c)});
  CHECK(validate(bad).ok());
  SullivanPresentation worse(c, {y, x * x, AlgElement(c)});
  auto r = validate(worse);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].kind == "d_squared");
}

TEST_CASE("validate flags an unstable ideal") {
  auto p = s2_model();
  auto s = make_sullivan(p);
  // The ideal (b) is not d-stable: d b = a^2 is not a multiple of b.
  QuotientAlgebra q(s, {s->to_cochain(p.generator("b"))});
  auto r = validate(q, 8);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].kind == "ideal_stability");
  QuotientAlgebra ok(s, {s->to_cochain(p.generator("a") * p.generator("a"))});
  CHECK(validate(ok, 8).ok());
}

TEST_CASE("validate checks finite algebra axioms") {
  CHECK(validate(*sphere_cohomology(2)).ok());
  FiniteCDGA::Builder b;
  auto one = b.add(0, "1");
  auto x = b.add(1, "x");
  auto y = b.add(1, "y");
  auto xy = b.add(2, "xy");
  b.set_unit(one);
  b.set_product(x, y, sv::unit(0));
  b.set_product(y, x, sv::unit(0));  // should be −xy
  auto bad = b.build();
  (void)xy;
  auto r = validate(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].kind == "commutativity");
}

TEST_CASE("cohomology of the 2-sphere model") {
  auto s = make_sullivan(s2_model());
  auto r = cohomology(*s, 0, 8);
  CHECK(r.betti() == std::vector<std::size_t>{1, 0, 1, 0, 0, 0, 0, 0, 0});
  REQUIRE(r.vanishes_above);
  CHECK(*r.vanishes_above == 2);
}

TEST_CASE("cohomology of an odd sphere model") {
  auto c = make_context({{"u", 3}});
  auto s = make_sullivan(SullivanPresentation(c, {AlgElement(c)}));
  auto r = cohomology(*s, 0, 8);
  CHECK(r.betti() == std::vector<std::size_t>{1, 0, 0, 1, 0, 0, 0, 0, 0});
}

TEST_CASE("cohomology of the non-formal example matches a dense oracle") {
  auto s = make_sullivan(nonformal());
  auto r = cohomology(*s, 0, 3);
  CHECK(r.at(1).dim() == 2);
  CHECK(r.at(2).dim() == 2);
  for (int n = 0; n <= 3; ++n) {
    auto dn = testing::dense(differential_matrix(*s, n));
    std::size_t rank_out = testing::dense_rank(dn);
    std::size_t rank_in = n > 0 ? testing::dense_rank(testing::dense(differential_matrix(*s, n - 1))) : 0;
    CHECK(r.at(n).dim() == s->dim(n) - rank_out - rank_in);
  }
  // [u] and [v] span H^1, [uw] and [vw] span H^2.
  auto uw = s->to_vector(2, nonformal().generator("u") * nonformal().generator("w"));
  auto vw = s->to_vector(2, nonformal().generator("v") * nonformal().generator("w"));
  CHECK(rank_of(std::vector<SparseVec>{r.at(2).class_of(uw), r.at(2).class_of(vw)}, 2) == 2);
}

TEST_CASE("quasi-isomorphism checks") {
  auto s = make_sullivan(s2_model());
  CHECK(is_quasi_iso(Morphism::identity(s), 10).ok);

  auto h = sphere_cohomology(2);
  auto f = Morphism::on_generators(s, h, {sv::unit(0), {}});
  CHECK(validate(f, 6).ok());
  CHECK(is_quasi_iso(f, 12).ok);

  auto cu = make_context({{"u", 3}});
  auto odd = make_sullivan(SullivanPresentation(cu, {AlgElement(cu)}));
  auto point = make_sullivan(SullivanPresentation());
  auto incl = Morphism::on_generators(point, odd, {});
  auto rep = is_quasi_iso(incl, 5);
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure == 3);
}

TEST_CASE("euler characteristics") {
  auto e2 = euler_characteristic(*sphere_cohomology(2), 4);
  CHECK(e2.value == 2);
  CHECK(e2.exact);
  auto e3 = euler_characteristic(*sphere_cohomology(3), 4);
  CHECK(e3.value == 0);
  CHECK(e3.exact);
}

TEST_CASE("cohomology is bounded by cochain dimension and morphisms carry cocycles to cocycles") {
  auto s = make_sullivan(nonformal());
  auto r = cohomology(*s, 0, 3);
  for (int n = 0; n <= 3; ++n) CHECK(r.at(n).dim() <= s->dim(n));

  auto s2 = make_sullivan(s2_model());
  auto f = Morphism::on_generators(s2, sphere_cohomology(2), {sv::unit(0), {}});
  for (int n = 0; n <= 6; ++n)
    for (const auto& z : cohomology_at(*s2, n).representatives) CHECK(apply_d(f.target(), n, f.apply(n, z)).empty());
}

TEST_CASE("window truncation agrees with the presentation below the cut") {
  auto s = make_sullivan(nonformal());
  auto c = make_context({{"a", 2}, {"b", 3}, {"u", 3}});
  auto a = AlgElement::generator(c, 0);
  auto t = make_sullivan(SullivanPresentation(c, {AlgElement(c), a * a, AlgElement(c)}));
  for (const auto& alg : {s, t}) {
    const int cut = 7;
    auto fin = FiniteCDGA::from_view(*alg, 0, cut);
    auto a1 = cohomology(*alg, 0, cut - 1).betti();
    auto a2 = cohomology(fin, 0, cut - 1).betti();
    CHECK(a1 == a2);
  }
}
