#include "doctest.h"
#include "oracles.hpp"
#include "rht/homotopy_lie.hpp"

using namespace rht;
using namespace rht::testing;

namespace {

SullivanPresentation s2_model() {
  auto c = make_context({{"a", 2}, {"b", 3}});
  auto a = AlgElement::generator(c, 0);
  return SullivanPresentation(c, {AlgElement(c), a * a});
}

SparseVec vec(std::vector<Rational> d) { return sv::from_dense(d); }

}  // namespace

TEST_CASE("quadratic part") {
  auto p = s2_model();
  CHECK(quadratic_part(p) == p);
  auto c = make_context({{"a", 2}, {"x", 2}, {"y", 3}, {"b", 5}});
  auto a = AlgElement::generator(c, 0), y = AlgElement::generator(c, 2);
  // d b = a·y + a^3: the cubic term is dropped.
  SullivanPresentation q(c, {AlgElement(c), AlgElement(c), AlgElement(c), a * y + power(a, 3)});
  auto d1 = quadratic_part(q);
  CHECK(d1.d(3) == a * y);
  auto nf = lie_model(3, {{0, 1, 2}});
  CHECK(quadratic_part(nf) == nf);
  auto cc = make_context({{"x", 3}, {"y", 4}});
  SullivanPresentation contractible(cc, {AlgElement::generator(cc, 1), AlgElement(cc)});
  CHECK_THROWS_AS(quadratic_part(contractible), std::invalid_argument);
}

TEST_CASE("S2 bracket against the pairing oracle") {
  // d b = a·a; ⟨a∧a; s x_a, s x_a⟩ = 2, prefactor (−1)^{|x_a|+1} = +1.
  int expected = (1 % 2 == 1 ? 1 : -1) * pairing(0, 2, 0, 2, 0, 0);
  CHECK(expected == 2);
  LieTable t(s2_model(), 2);
  REQUIRE(t.dim(1) == 1);
  REQUIRE(t.dim(2) == 1);
  auto xx = t.bracket_basis(1, 0, 1, 0);
  CHECK(xx == vec({Rational(expected)}));
  CHECK(t.format(2, xx) == "2*x_b");
  // Whitehead transport: [sx, sx]_W = (−1)^{|x|} s[x,x] = −2 s y.
  auto w = whitehead_product(t, 2, sv::unit(0), 2, sv::unit(0));
  CHECK(w.degree == 3);
  CHECK(w.value == vec({Rational(-2)}));
  CHECK(check_lie_axioms(t).empty());
}

TEST_CASE("non-formal example brackets") {
  // d w = u·v, all of degree 1: [x_u, x_v] = (−1)^{0+1} ⟨u∧v; s x_u, s x_v⟩ x_w.
  int expected = -pairing(0, 1, 1, 1, 0, 1);
  CHECK(expected == 1);
  LieTable t(lie_model(3, {{0, 1, 2}}), 0);
  CHECK(t.bracket_basis(0, 0, 0, 1) == sv::scale(sv::unit(2), expected));
  CHECK(t.bracket_basis(0, 1, 0, 0) == sv::scale(sv::unit(2), -expected));
  CHECK(t.bracket_basis(0, 0, 0, 2).empty());
  CHECK(check_lie_axioms(t).empty());
}

TEST_CASE("abelian models have zero brackets") {
  auto c = make_context({{"u", 3}, {"v", 5}});
  LieTable t(SullivanPresentation(c, {AlgElement(c), AlgElement(c)}), 6);
  CHECK(t.bracket_basis(2, 0, 2, 0).empty());
  CHECK(t.bracket_basis(2, 0, 4, 0).empty());
  CHECK(whitehead_product(t, 3, sv::unit(0), 3, sv::unit(0)).value.empty());
}

TEST_CASE("bracket beyond the bound is an error") {
  LieTable t(s2_model(), 2);
  CHECK_THROWS_AS(t.bracket_basis(1, 0, 2, 0), OutOfBound);
}

TEST_CASE("Jacobi holds for the wedge model") {
  MinimalModelOptions o;
  o.max_degree = 6;
  FiniteCDGA::Builder b;
  b.set_unit(b.add(0, "1"));
  b.add(2, "e0");
  b.add(2, "e1");
  auto r = minimal_model(std::make_shared<const FiniteCDGA>(b.build()), o);
  LieTable t(r.model, 5);
  CHECK(check_lie_axioms(t).empty());
  auto ranks = homotopy_ranks(r.model, 6);
  CHECK(ranks[2] == 2);
  CHECK(ranks[3] == 3);
  CHECK(ranks[4] == 2);
}

TEST_CASE("pi_1 Whitehead product is the group commutator") {
  LieTable t(lie_model(3, {{0, 1, 2}}), 0);
  auto w = whitehead_product(t, 1, sv::unit(0), 1, sv::unit(1));
  CHECK(w.group_commutator);
  // In the Heisenberg group exp a exp b exp(−a) exp(−b) = exp [a,b].
  CHECK(w.value == sv::unit(2));
}

TEST_CASE("filtrations on the non-formal example") {
  auto p = lie_model(3, {{0, 1, 2}});
  auto r = lcs_filtrations(p, 1, 8);
  CHECK(r.v_dims == std::vector<std::size_t>{2, 3});
  REQUIRE(r.nil_v);
  CHECK(*r.nil_v == 2);
  REQUIRE(r.nil_l);
  CHECK(*r.nil_l == 2);
  CHECK(r.agrees());
}

TEST_CASE("filtrations on Heisenberg-type models") {
  // Free nilpotent of class 3 on two generators and a class-4 filiform one.
  for (auto [model, cls] : {std::pair{lie_model(5, {{0, 1, 2}, {0, 2, 3}, {1, 2, 4}}), 3},
                            std::pair{lie_model(5, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}), 4}}) {
    CHECK(validate(model).ok());
    auto r = lcs_filtrations(model, 1, 10);
    REQUIRE(r.agrees());
    CHECK(*r.nil_v == cls);
    CHECK(nilpotency_class(LieTable(model, 0)) == cls);
  }
}

TEST_CASE("filtrations without degree-1 generators") {
  for (int k : {2, 3}) {
    auto r = lcs_filtrations(s2_model(), k, 4);
    CHECK(r.nil_v == 1);
    CHECK(r.nil_l == 1);
  }
  auto r = lcs_filtrations(s2_model(), 4, 4);
  CHECK(r.nil_v == 0);
  CHECK(r.nil_l == 0);
}

TEST_CASE("Hurewicz map") {
  auto u = make_context({{"u", 3}});
  auto h3 = hurewicz_matrix(SullivanPresentation(u, {AlgElement(u)}), 3);
  CHECK(h3.rank == 1);
  CHECK(h3.kernel_dim == 0);
  CHECK(h3.cokernel_dim == 0);

  auto h = hurewicz_matrix(s2_model(), 3);
  CHECK(h.rank == 0);
  CHECK(h.cokernel_dim == 1);
  // The cokernel is detected by b, which pairs nontrivially with [x,x].
  LieTable t(s2_model(), 2);
  CHECK_FALSE(t.bracket_basis(1, 0, 1, 0).empty());

  FiniteCDGA::Builder b;
  b.set_unit(b.add(0, "1"));
  b.add(2, "e0");
  b.add(2, "e1");
  MinimalModelOptions o;
  o.max_degree = 4;
  auto r = minimal_model(std::make_shared<const FiniteCDGA>(b.build()), o);
  auto hw = hurewicz_matrix(r.model, 2);
  CHECK(hw.rank == 2);
  CHECK(hw.kernel_dim == 0);
  CHECK(hw.cokernel_dim == 0);
}

TEST_CASE("BCH series coefficients") {
  auto s = bch_series(3);
  CHECK(s.at({0}) == 1);
  CHECK(s.at({1}) == 1);
  CHECK(s.at({0, 1}) == Rational(1) / 2);
  CHECK(s.at({1, 0}) == Rational(-1) / 2);
  // [A,[A,B]]/12 contributes 1/12 to AAB, −1/6 to ABA.
  CHECK(s.at({0, 0, 1}) == Rational(1) / 12);
  CHECK(s.at({0, 1, 0}) == Rational(-1) / 6);
  CHECK(s.count({0, 0}) == 0);
}

TEST_CASE("BCH product in nilpotent tables") {
  LieTable abel(lie_model(2, {}), 0);
  CHECK(bch_product(abel, 1, vec({1, 2}), vec({3, -1})) == vec({4, 1}));

  LieTable heis(lie_model(3, {{0, 1, 2}}), 0);
  CHECK(bch_product(heis, 2, sv::unit(0), sv::unit(1)) == vec({1, 1, Rational(1) / 2}));

  LieTable free3(lie_model(5, {{0, 1, 2}, {0, 2, 3}, {1, 2, 4}}), 0);
  CHECK(bch_product(free3, 3, sv::unit(0), sv::unit(1)) ==
        vec({1, 1, Rational(1) / 2, Rational(1) / 12, Rational(-1) / 12}));
  CHECK_THROWS_AS(bch_product(free3, 2, sv::unit(0), sv::unit(1)), NotNilpotent);
}

TEST_CASE("BCH is associative with inverses") {
  std::mt19937 rng(5);
  std::vector<std::pair<LieTable, int>> tables{
      {LieTable(lie_model(3, {{0, 1, 2}}), 0), 2},
      {LieTable(lie_model(5, {{0, 1, 2}, {0, 2, 3}, {1, 2, 4}}), 0), 3},
      {LieTable(lie_model(5, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}), 0), 4}};
  for (const auto& [t, c] : tables) {
    auto rnd = [&] {
      std::vector<Rational> d;
      for (std::size_t i = 0; i < t.dim(0); ++i) d.push_back(testing::random_rational(rng));
      return vec(d);
    };
    for (int trial = 0; trial < 20; ++trial) {
      auto a = rnd(), b = rnd(), e = rnd();
      CHECK(bch_product(t, c, bch_product(t, c, a, b), e) == bch_product(t, c, a, bch_product(t, c, b, e)));
      CHECK(bch_product(t, c, a, sv::scale(a, -1)).empty());
    }
  }
}
