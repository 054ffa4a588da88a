#include "doctest.h"
#include "oracles.hpp"
#include "rht/constructions.hpp"

#include <bit>

using namespace rht;
using namespace rht::testing;

namespace {

std::vector<std::size_t> betti(const SullivanPresentation& p, int n) {
  return cohomology(*make_sullivan(p), 0, n).betti();
}

std::vector<std::size_t> finite_betti(const GradedAlgebra& a, int lo, int hi) { return cohomology(a, lo, hi).betti(); }

std::vector<Rational> row(std::initializer_list<int> xs) {
  std::vector<Rational> r;
  for (int x : xs) r.emplace_back(x);
  return r;
}

SubspaceArrangement boolean_arrangement(int n) {
  SubspaceArrangement a{n, {}};
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    a.subspaces.push_back({e});
  }
  return a;
}

SubspaceArrangement braid_arrangement() {
  return {3, {{row({1, -1, 0})}, {row({1, 0, -1})}, {row({0, 1, -1})}}};
}

PDAlgebra pd_sphere(int n) { return make_pd(truncated_polynomial(n, 1), n, {n, 0}); }

}  // namespace

TEST_CASE("catalog models") {
  auto s3 = sphere_model(3);
  REQUIRE(s3.size() == 1);
  CHECK(s3.context()->degree(0) == 3);
  CHECK(s3.d(0).is_zero());

  auto s2 = sphere_model(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2.d(0).is_zero());
  CHECK(s2.d(1) == s2.generator(0) * s2.generator(0));

  CHECK(std::get<SullivanPresentation>(catalog("sphere(3)")) == s3);
  CHECK(std::get<SullivanPresentation>(catalog("cp", {"2"})) == cp_model(2));
  CHECK_THROWS_AS(catalog("moebius(2)"), UnknownCatalogEntry);
  CHECK_THROWS_AS(catalog("sphere(x)"), UnknownCatalogEntry);
  CHECK_THROWS_AS(catalog("sphere(2,3)"), UnknownCatalogEntry);
}

TEST_CASE("product model obeys Kunneth") {
  auto m = std::get<SullivanPresentation>(catalog("product(sphere(2),sphere(3))"));
  auto b = betti(m, 7);
  // Künneth: Poincaré polynomials multiply.
  std::vector<std::size_t> a{1, 0, 1, 0, 0, 0, 0, 0}, c{1, 0, 0, 1, 0, 0, 0, 0}, expected(8, 0);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; i + j < 8; ++j) expected[i + j] += a[i] * c[j];
  CHECK(b == expected);
  CHECK(std::vector<std::size_t>(b.begin(), b.begin() + 6) == std::vector<std::size_t>{1, 0, 1, 1, 0, 1});
}

TEST_CASE("finite catalog entries") {
  auto t = std::get<FinitePtr>(catalog("truncated_poly(2,3)"));
  CHECK(finite_betti(*t, 0, 6) == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
  auto w = std::get<FinitePtr>(catalog("wedge_cohomology(sphere(2),sphere(2))"));
  CHECK(finite_betti(*w, 0, 4) == std::vector<std::size_t>{1, 0, 2, 0, 0});
  CHECK(validate(*w).ok());
  auto mixed = std::get<FinitePtr>(catalog("product(sphere(2),truncated_poly(2,2))"));
  CHECK(finite_betti(*mixed, 0, 6) == std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 1});
  CHECK(validate(*mixed).ok());
  CHECK(betti(torus_model(3), 3) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(betti(kz_model(4), 12) == std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1});
}

TEST_CASE("homogeneous spaces") {
  std::vector<Generator> su3{{"x3", 3}, {"x5", 5}};
  SUBCASE("trivial subgroup gives the group") {
    auto m = homogeneous_space_model(su3, {}, {AlgElement(), AlgElement()});
    CHECK(m.size() == 2);
    CHECK(m.d(0).is_zero());
    CHECK(m.d(1).is_zero());
  }
  SUBCASE("SU(3)/SU(2) is S^5") {
    std::vector<Generator> su2{{"c", 3}};
    auto bh = classifying_context(su2);
    auto c = AlgElement::generator(bh, 0);
    auto m = homogeneous_space_model(su3, su2, {c, AlgElement(bh)});
    CHECK(betti(m, 10) == betti(sphere_model(5), 10));
  }
  SUBCASE("CP^n as SU(n+1)/U(n)") {
    for (int n = 1; n <= 3; ++n) {
      // U(n) primitives in degrees 1, 3, ..., 2n−1; Chern classes c_1..c_n.
      std::vector<Generator> g, h;
      for (int k = 2; k <= n + 1; ++k) g.push_back({"x" + std::to_string(2 * k - 1), 2 * k - 1});
      for (int k = 1; k <= n; ++k) h.push_back({"c" + std::to_string(k), 2 * k - 1});
      auto bh = classifying_context(h);
      auto chern = [&](int k) {
        if (k == 0) return AlgElement::constant(bh, 1);
        if (k > n) return AlgElement(bh);
        return AlgElement::generator(bh, static_cast<std::size_t>(k - 1));
      };
      // c(E ⊕ det E^{-1}) = c(E)(1 − c_1)
      std::vector<AlgElement> phi;
      for (int k = 2; k <= n + 1; ++k) phi.push_back(chern(k) - chern(1) * chern(k - 1));
      auto m = homogeneous_space_model(g, h, phi);
      CHECK(validate(m).ok());
      CHECK(certified_top(m) == 2 * n);
      std::vector<std::size_t> expected(2 * n + 3, 0);
      for (int k = 0; k <= n; ++k) expected[2 * k] = 1;
      CHECK(betti(m, 2 * n + 2) == expected);
      CHECK(finite_betti(*truncated_polynomial(2, n), 0, 2 * n + 2) == expected);
    }
  }
  SUBCASE("degree errors") {
    CHECK_THROWS_AS(homogeneous_space_model({{"x", 4}}, {}, {AlgElement()}), DegreeMismatch);
    std::vector<Generator> su2{{"c", 3}};
    auto bh = classifying_context(su2);
    auto c = AlgElement::generator(bh, 0);
    CHECK_THROWS_AS(homogeneous_space_model(su3, su2, {c * c, AlgElement(bh)}), DegreeMismatch);
    CHECK_THROWS_AS(homogeneous_space_model(su3, su2, {c}), DegreeMismatch);
  }
}

TEST_CASE("biquotients") {
  std::vector<Generator> su3{{"x3", 3}, {"x5", 5}};
  std::vector<Generator> su2{{"c", 3}};
  auto bh = classifying_context(su2);
  auto c = AlgElement::generator(bh, 0);
  SUBCASE("K trivial reduces to the homogeneous model") {
    auto a = biquotient_model(su3, su2, {}, {c, AlgElement(bh)}, {AlgElement(), AlgElement()});
    CHECK(a == homogeneous_space_model(su3, su2, {c, AlgElement(bh)}));
  }
  SUBCASE("H and K trivial") {
    auto a = biquotient_model(su3, {}, {}, {AlgElement(), AlgElement()}, {AlgElement(), AlgElement()});
    CHECK(a.d(0).is_zero());
    CHECK(a.d(1).is_zero());
  }
  SUBCASE("torus acting on SU(2) x SU(2) from both sides") {
    std::vector<Generator> g{{"x", 3}, {"y", 3}};
    auto bs = classifying_context({{"s", 1}});
    auto bt = classifying_context({{"t", 1}});
    auto s = AlgElement::generator(bs, 0);
    auto t = AlgElement::generator(bt, 0);
    auto m = biquotient_model(g, {{"s", 1}}, {{"t", 1}}, {s * s, AlgElement(bs)}, {AlgElement(bt), t * t});
    CHECK(validate(m).ok());
    auto top = certified_top(m);
    REQUIRE(top);
    CHECK(*top == 4);
    CHECK(betti(m, 6) == std::vector<std::size_t>{1, 0, 2, 0, 1, 0, 0});
  }
}

TEST_CASE("free loop space of S^3") {
  auto l = free_loop_model(sphere_model(3));
  REQUIRE(l.size() == 2);
  CHECK((*l.context())[1].name == "su");
  CHECK(l.context()->degree(1) == 2);
  CHECK(l.d(1).is_zero());
  auto b = betti(l, 10);
  CHECK(b == std::vector<std::size_t>{1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  // polynomial ⊗ exterior oracle: Q[su] ⊗ Λu
  for (int k = 0; k <= 10; ++k) CHECK(b[k] == static_cast<std::size_t>((k % 2 == 0) + (k >= 3 && k % 2 == 1)));
}

TEST_CASE("free loop space of S^2") {
  auto p = sphere_model(2);
  auto l = free_loop_model(p);
  REQUIRE(l.size() == 4);
  auto a = l.generator("a"), sa = l.generator("sa");
  CHECK(l.d(2).is_zero());
  CHECK(l.d(3) == a * sa * Rational(-2));
  // D restricted to V is d
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(l.d(i) == widen(p.d(i), l.context()));
  CHECK(validate(l).ok());
  CHECK(betti(l, 10) == brute_betti(l, 10));
  CHECK(free_loop_model(SullivanPresentation()).size() == 0);
  CHECK_THROWS_AS(free_loop_model(torus_model(1)), UnsupportedInput);
}

TEST_CASE("holonomy of a product extension vanishes") {
  auto base = sphere_model(2);
  auto total = tensor(base, sphere_model(3));
  auto ext = make_extension(base, total);
  auto h = holonomy_representation(ext, 6);
  CHECK(h.nilpotent);
  for (const auto& b : h.blocks)
    for (const auto& col : b.matrix.columns()) CHECK(col.empty());
}

TEST_CASE("holonomy read off the linear part") {
  auto bctx = make_context({{"w", 1}});
  SullivanPresentation base(bctx, {AlgElement(bctx)});
  auto ctx = make_context({{"w", 1}, {"x", 2}, {"y", 2}});
  auto w = AlgElement::generator(ctx, 0), x = AlgElement::generator(ctx, 1);
  SullivanPresentation total(ctx, {AlgElement(ctx), AlgElement(ctx), w * x});
  auto h = holonomy_representation(make_extension(base, total), 2);
  const auto& H2 = h.fiber_cohomology.at(2);
  REQUIRE(H2.dim() == 2);
  const HolonomyBlock* block = nullptr;
  for (const auto& b : h.blocks)
    if (b.degree == 2) block = &b;
  REQUIRE(block);
  CHECK(block->base_generator == 0);
  // fiber representatives are x, y in that order
  auto F = make_sullivan(h.fiber);
  auto fx = F->to_vector(2, h.fiber.generator("x"));
  auto fy = F->to_vector(2, h.fiber.generator("y"));
  CHECK(block->matrix.apply(H2.class_of(fy)) == H2.class_of(fx));
  CHECK(block->matrix.apply(H2.class_of(fx)).empty());
  CHECK(h.nilpotent);
}

TEST_CASE("holonomy of the acyclic closure is nilpotent") {
  auto ac = acyclic_closure(sphere_model(2), 6);
  auto h = holonomy_representation(ac.ext, 6);
  CHECK(h.nilpotent);
  CHECK_FALSE(h.blocks.empty());
}

TEST_CASE("mapping space of the constant map S^2 -> S^3") {
  auto X = sphere_model(2), Y = sphere_model(3);
  // ⊕_q Hom(π_q(Y), H_{q−n}(X)) with π_*(S³)⊗Q = Q in degree 3.
  std::vector<std::size_t> hx{1, 0, 1};
  for (int n = 1; n <= 6; ++n) {
    std::size_t expected = 0;
    for (const auto& [q, r] : homotopy_ranks(Y, 8))
      if (q - n >= 0 && q - n < static_cast<int>(hx.size())) expected += r * hx[q - n];
    auto r = mapping_space_pi(Y, X, {AlgElement(X.context())}, n);
    CHECK(r.dimension == expected);
  }
  CHECK(mapping_space_pi(Y, X, {AlgElement(X.context())}, 1).dimension == 1);
  CHECK(mapping_space_pi(Y, X, {AlgElement(X.context())}, 3).dimension == 1);
}

TEST_CASE("mapping space of the identity on S^3 and into a point") {
  auto S = sphere_model(3);
  auto r = mapping_space_pi(S, S, {S.generator(0)}, 3);
  CHECK(r.dimension == 1);
  CHECK(r.contributing == std::vector<std::pair<std::size_t, int>>{{0, 0}});
  for (int n = 1; n <= 4; ++n) CHECK(mapping_space_pi(SullivanPresentation(), S, {}, n).dimension == 0);
  CHECK_THROWS_AS(mapping_space_pi(S, S, {S.generator(0) * Rational(1)}, 0), std::invalid_argument);
  auto X = sphere_model(2);
  // a ↦ 1 is not degree-preserving
  CHECK_THROWS_AS(mapping_space_pi(X, S, {AlgElement::constant(S.context(), 1), AlgElement(S.context())}, 1),
                  DegreeMismatch);
}

TEST_CASE("diagonal class") {
  SUBCASE("S^2") {
    auto pd = pd_sphere(2);
    auto D = diagonal_class(pd);
    const auto& T = *D.square;
    SparseVec expected = sv::add(T.tensor(0, sv::unit(0), 2, sv::unit(0)), T.tensor(2, sv::unit(0), 0, sv::unit(0)));
    CHECK(D.value.coeffs == expected);
    CHECK(apply_d(T, 2, D.value.coeffs).empty());
  }
  SUBCASE("S^3") {
    auto D = diagonal_class(pd_sphere(3));
    const auto& T = *D.square;
    SparseVec expected = sv::sub(T.tensor(0, sv::unit(0), 3, sv::unit(0)), T.tensor(3, sv::unit(0), 0, sv::unit(0)));
    CHECK(D.value.coeffs == expected);
  }
  SUBCASE("point") {
    FiniteCDGA::Builder b;
    auto one = b.add(0, "1");
    b.set_unit(one);
    auto pd = make_pd(std::make_shared<const FiniteCDGA>(b.build()), 0, one);
    auto D = diagonal_class(pd);
    CHECK(D.value.coeffs == D.square->tensor(0, sv::unit(0), 0, sv::unit(0)));
  }
  SUBCASE("(a ⊗ 1)·D = (1 ⊗ a)·D on CP^2") {
    auto pd = make_pd(truncated_polynomial(2, 2), 4, {4, 0});
    auto D = diagonal_class(pd);
    const auto& T = *D.square;
    for (int deg : {2, 4}) {
      auto l = multiply(T, deg, T.tensor(deg, sv::unit(0), 0, sv::unit(0)), 4, D.value.coeffs);
      auto r = multiply(T, deg, T.tensor(0, sv::unit(0), deg, sv::unit(0)), 4, D.value.coeffs);
      CHECK(l == r);
    }
  }
  SUBCASE("degenerate pairing") {
    FiniteCDGA::Builder b;
    b.set_unit(b.add(0, "1"));
    b.add(2, "a");
    b.add(2, "b");
    auto top = b.add(4, "w");
    auto A = std::make_shared<const FiniteCDGA>(b.build());
    CHECK_THROWS_AS(make_pd(A, 4, top), DegeneratePairing);
  }
  SUBCASE("from a Sullivan presentation") {
    auto pd = make_pd(sphere_model(2), 2, sphere_model(2).generator("a"));
    CHECK(pd.algebra->total_dim() == 2);
    CHECK(pd.basis.size() == 2);
  }
}

TEST_CASE("configuration model of S^2") {
  auto pd = pd_sphere(2);
  auto one = config_space_model(pd, 1);
  CHECK(finite_betti(*one.quotient, 0, 2) == finite_betti(*pd.algebra, 0, 2));

  auto cs = config_space_model(pd, 2);
  CHECK(validate(*cs.quotient, cs.top_degree).ok());
  auto chi = euler_characteristic(*cs.quotient, cs.top_degree);
  CHECK(chi.value == 2 * (2 - 1));
  // dx_12 = p_12(D_A) in the ambient
  const auto& R = *cs.ambient;
  auto dx = apply_d(R, 1, R.to_vector(1, R.fiber_generator(0)));
  auto D = diagonal_class(pd);
  // both sides carry the same A ⊗ A basis order
  SparseVec expected;
  for (const auto& [i, c] : D.value.coeffs) {
    const auto& t = D.square->basis(2)[i];
    auto idx = R.index_of(2, MixedTerm{2, D.square->index_of(2, t), Monomial()});
    REQUIRE(idx);
    expected = sv::axpy(expected, c, sv::unit(static_cast<std::uint32_t>(*idx)));
  }
  CHECK(dx == expected);
}

TEST_CASE("configuration model of S^3 matches the fibration over S^3") {
  auto cs = config_space_model(pd_sphere(3), 2);
  CHECK(validate(*cs.quotient, cs.top_degree).ok());
  // F(S³,2) → S³ has fiber S³ minus a point, which is contractible.
  CHECK(finite_betti(*cs.quotient, 0, cs.top_degree) == betti(sphere_model(3), cs.top_degree));
}

TEST_CASE("configuration model with three points") {
  auto pd = pd_sphere(2);
  auto cs = config_space_model(pd, 3);
  CHECK(validate(*cs.quotient, cs.top_degree).ok());
  CHECK(euler_characteristic(*cs.quotient, cs.top_degree).value == 2 * 1 * 0);
  auto arnold = cs.arnold_relation(1, 2, 3);
  CHECK_FALSE(arnold.coeffs.empty());
  CHECK(cs.quotient->ideal_contains(arnold.degree, arnold.coeffs));
  CHECK_THROWS_AS(config_space_model(pd, 4), BudgetExceeded);
}

TEST_CASE("Boolean arrangement gives a torus") {
  auto D = arrangement_complex(boolean_arrangement(3));
  CHECK(validate(*D).ok());
  CHECK(D->has_zero_differential());
  auto H = cohomology_algebra(*D, 0, 3);
  CHECK(finite_betti(*H, 0, 3) == std::vector<std::size_t>{1, 3, 3, 1});
  // the product of the three degree-1 classes is the top class
  auto p = multiply(*H, 1, sv::unit(0), 1, sv::unit(1));
  p = multiply(*H, 2, p, 1, sv::unit(2));
  CHECK_FALSE(p.empty());
  auto tor = cohomology_algebra(*make_sullivan(torus_model(3)), 0, 3);
  CHECK(finite_betti(*tor, 0, 3) == finite_betti(*H, 0, 3));
}

TEST_CASE("braid arrangement in C^3") {
  auto D = arrangement_complex(braid_arrangement());
  CHECK(validate(*D).ok());
  auto lat = intersection_lattice(braid_arrangement());
  CHECK(lat.flats.size() == 5);  // ambient, three hyperplanes, the line
  CHECK(D->min_degree() == 0);
  auto b = finite_betti(*D, 0, 4);
  // (1 + t)(1 + 2t) = 1 + 3t + 2t²
  CHECK(b == std::vector<std::size_t>{1, 3, 2, 0, 0});

  // Brute force: ranks of the subset complex from dense matrices.
  const int N = 3;
  std::vector<int> codim(1 << N);
  for (int m = 0; m < (1 << N); ++m) {
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < N; ++i)
      if (m >> i & 1) rows.push_back(braid_arrangement().subspaces[i][0]);
    codim[m] = static_cast<int>(testing::dense_rank(rows));
  }
  auto deg = [&](int m) { return 2 * codim[m] - std::popcount(static_cast<unsigned>(m)); };
  std::map<int, std::vector<int>> by_degree;
  for (int m = 0; m < (1 << N); ++m) by_degree[deg(m)].push_back(m);
  auto rank_d = [&](int k) {
    const auto& src = by_degree[k];
    const auto& dst = by_degree[k + 1];
    std::vector<std::vector<Rational>> mat(dst.size(), std::vector<Rational>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
      int s = src[j], pos = 0;
      for (int i = 0; i < N; ++i) {
        if (!(s >> i & 1)) continue;
        ++pos;
        int t = s & ~(1 << i);
        if (codim[t] != codim[s]) continue;
        auto it = std::find(dst.begin(), dst.end(), t);
        mat[static_cast<std::size_t>(it - dst.begin())][j] = pos % 2 ? -1 : 1;
      }
    }
    return testing::dense_rank(mat);
  };
  for (int k = 0; k <= 2; ++k)
    CHECK(b[k] == by_degree[k].size() - rank_d(k) - (by_degree.count(k - 1) ? rank_d(k - 1) : 0));
}

TEST_CASE("empty arrangement") {
  auto D = arrangement_complex({3, {}});
  CHECK(D->total_dim() == 1);
  CHECK(finite_betti(*D, 0, 0) == std::vector<std::size_t>{1});
}

TEST_CASE("hyperplanes in general position") {
  // e_1, e_2, e_3, e_1 + e_2 + e_3 in Q^4: any subset is independent.
  SubspaceArrangement a{4, {{row({1, 0, 0, 0})}, {row({0, 1, 0, 0})}, {row({0, 0, 1, 0})}, {row({1, 1, 1, 1})}}};
  auto D = arrangement_complex(a);
  CHECK(D->has_zero_differential());
  for (int k = 0; k <= 4; ++k) {
    std::size_t subsets = 0;
    for (unsigned m = 0; m < 16; ++m)
      if (std::popcount(m) == k) ++subsets;
    CHECK(D->dim(k) == subsets);
  }
}

TEST_CASE("arrangement complexes satisfy d^2 = 0 and Leibniz") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-1, 1), amb(2, 4), count(1, 5), rows(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    SubspaceArrangement a{amb(rng), {}};
    int c = count(rng);
    for (int s = 0; s < c; ++s) {
      std::vector<std::vector<Rational>> eqs;
      int r = rows(rng);
      for (int i = 0; i < r; ++i) {
        std::vector<Rational> e(a.ambient);
        for (auto& x : e) x = entry(rng);
        eqs.push_back(e);
      }
      a.subspaces.push_back(eqs);
    }
    auto D = arrangement_complex(a);
    auto report = validate(*D);
    CHECK(report.ok());
    for (int n = D->min_degree(); n < D->top_degree(); ++n)
      for (std::size_t i = 0; i < D->dim(n); ++i) CHECK(apply_d(*D, n + 1, D->differential(n, i)).empty());
  }
}
