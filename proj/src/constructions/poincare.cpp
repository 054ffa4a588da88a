#include "rht/constructions.hpp"

namespace rht {

namespace {

Rational epsilon(const PDAlgebra& a, const SparseVec& top) { return sv::dot(a.orientation, top); }

}  // namespace

PDAlgebra make_pd(FinitePtr a, int m, FiniteCDGA::Ref omega, const LinalgOptions& opts) {
  if (m < 0) throw std::invalid_argument("formal dimension must be nonnegative");
  if (a->min_degree() < 0 || a->dim(0) != 1 || !a->unit_index())
    throw DegeneratePairing("PD algebra needs A^0 = Q·1 and no negative degrees");
  for (int n = m + 1; n <= a->top_degree(); ++n)
    if (a->dim(n) > 0) throw DegeneratePairing("PD algebra has nonzero elements above the formal dimension");
  if (omega.degree != m || omega.index >= a->dim(m))
    throw DegeneratePairing("orientation element must be a basis element of degree " + std::to_string(m));

  PDAlgebra pd;
  pd.algebra = a;
  pd.dimension = m;

  // ε: A^m → A^m / d(A^{m−1}) ≅ ℚ with ε(ω) = 1.
  const std::size_t dm = a->dim(m);
  Echelon exact(dm, opts);
  if (m >= 1)
    for (std::size_t i = 0; i < a->dim(m - 1); ++i) exact.insert(a->differential(m - 1, i));
  if (exact.rank() + 1 != dm)
    throw DegeneratePairing("A^m modulo coboundaries must be one-dimensional, found dimension " +
                            std::to_string(dm - exact.rank()));
  SparseVec w = exact.reduce(sv::unit(static_cast<std::uint32_t>(omega.index)));
  if (w.empty()) throw DegeneratePairing("orientation element is a coboundary");
  for (std::size_t i = 0; i < dm; ++i) {
    SparseVec r = exact.reduce(sv::unit(static_cast<std::uint32_t>(i)));
    if (r.empty()) continue;
    // r = c·w since the quotient is one-dimensional
    Rational c = r.front().second / sv::get(w, r.front().first);
    pd.orientation.emplace_back(static_cast<std::uint32_t>(i), c);
  }

  for (int k = 0; k <= m; ++k) {
    const std::size_t dk = a->dim(k), dl = a->dim(m - k);
    if (dk != dl)
      throw DegeneratePairing("dim A^" + std::to_string(k) + " != dim A^" + std::to_string(m - k));
    if (dk == 0) continue;
    // G[i][l] = ε(a_i b_l); its inverse gives the dual basis.
    std::vector<SparseVec> cols(dl);
    for (std::size_t l = 0; l < dl; ++l) {
      std::vector<std::pair<std::uint32_t, Rational>> e;
      for (std::size_t i = 0; i < dk; ++i) {
        Rational g = epsilon(pd, a->product(k, i, m - k, l));
        if (g != 0) e.emplace_back(static_cast<std::uint32_t>(i), g);
      }
      cols[l] = sv::collect(e);
    }
    std::vector<SparseVec> targets;
    for (std::size_t j = 0; j < dk; ++j) targets.push_back(sv::unit(static_cast<std::uint32_t>(j)));
    auto sol = solve_linear(RationalMatrix::from_columns(dk, cols), targets, opts);
    if (sol.rank != dk) throw DegeneratePairing("pairing A^" + std::to_string(k) + " x A^" +
                                                std::to_string(m - k) + " is degenerate");
    for (std::size_t j = 0; j < dk; ++j) {
      pd.basis.push_back({k, sv::unit(static_cast<std::uint32_t>(j))});
      pd.dual.push_back({m - k, *sol.solutions[j]});
    }
  }
  return pd;
}

PDAlgebra make_pd(const SullivanPresentation& p, int m, const AlgElement& omega, const LinalgOptions& opts) {
  SullivanAlgebra S(p);
  auto a = std::make_shared<const FiniteCDGA>(FiniteCDGA::from_view(S, 0, m));
  if (omega.terms().size() != 1 || omega.terms().begin()->second != 1 || omega.degree() != m)
    throw DegeneratePairing("orientation must be a single monomial of degree " + std::to_string(m));
  auto idx = S.index_of(m, omega.terms().begin()->first);
  if (!idx) throw DegeneratePairing("orientation monomial is not in the basis");
  return make_pd(a, m, {m, *idx}, opts);
}

DiagonalClass diagonal_class(const PDAlgebra& a) {
  DiagonalClass d;
  d.square = std::make_shared<const TensorAlgebra>(a.algebra, a.algebra);
  d.value.degree = a.dimension;
  for (std::size_t i = 0; i < a.basis.size(); ++i) {
    const auto& x = a.basis[i];
    const auto& y = a.dual[i];
    Rational sign = x.degree % 2 ? -1 : 1;
    d.value.coeffs = sv::axpy(d.value.coeffs, sign, d.square->tensor(x.degree, x.coeffs, y.degree, y.coeffs));
  }
  return d;
}

namespace {

struct PowerEmbedding {
  std::vector<AlgebraPtr> levels;  // A, A⊗A, (A⊗A)⊗A, ...

  // p_i(x) in the top level, positions 1-based.
  SparseVec embed(int i, int deg, const SparseVec& x) const { return embed_at(levels.size(), i, deg, x); }

  SparseVec embed_at(std::size_t level, int i, int deg, const SparseVec& x) const {
    if (level == 1) return x;
    const auto& t = static_cast<const TensorAlgebra&>(*levels[level - 1]);
    if (static_cast<std::size_t>(i) == level) return t.tensor(0, unit_cochain(*levels[level - 2]).coeffs, deg, x);
    return t.tensor(deg, embed_at(level - 1, i, deg, x), 0, unit_cochain(*levels[0]).coeffs);
  }
};

MixedElement base_mixed(int degree, const SparseVec& v) {
  MixedElement e;
  for (const auto& [i, c] : v) e[MixedTerm{degree, i, Monomial()}] = c;
  return e;
}

}  // namespace

Cochain ConfigSpaceModel::arnold_relation(int i, int j, int k) const {
  auto x = [&](int p, int q) {
    Rational sign = 1;
    if (p > q) {
      std::swap(p, q);
      if (dimension % 2) sign = -1;
    }
    for (std::size_t g = 0; g < pairs.size(); ++g)
      if (pairs[g] == std::pair<int, int>{p, q}) {
        MixedElement e = ambient->fiber_generator(g);
        for (auto& [t, c] : e) c *= sign;
        return e;
      }
    throw std::out_of_range("no such pair");
  };
  MixedElement r = ambient->mul(x(i, j), x(j, k));
  for (const auto& [t, c] : ambient->mul(x(j, k), x(k, i))) add_to(r, t, c);
  for (const auto& [t, c] : ambient->mul(x(k, i), x(i, j))) add_to(r, t, c);
  int deg = 2 * (dimension - 1);
  return {deg, ambient->to_vector(deg, r)};
}

ConfigSpaceModel config_space_model(const PDAlgebra& a, int k, int max_k, const LinalgOptions& opts) {
  if (k < 1) throw std::invalid_argument("configuration model needs k >= 1");
  if (k > max_k) throw BudgetExceeded("configuration model limited to k <= " + std::to_string(max_k));
  const int m = a.dimension;
  if (k >= 2 && m < 2) throw UnsupportedInput("configuration model needs formal dimension >= 2 for k >= 2");

  PowerEmbedding emb;
  emb.levels.push_back(a.algebra);
  for (int j = 2; j <= k; ++j)
    emb.levels.push_back(std::make_shared<const TensorAlgebra>(emb.levels.back(), a.algebra));
  const auto& view = *emb.levels.back();
  const int base_top = k * m;
  auto base = std::make_shared<const FiniteCDGA>(FiniteCDGA::from_view(view, 0, base_top));

  ConfigSpaceModel cs;
  cs.dimension = m;
  std::vector<Generator> gens;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      cs.pairs.emplace_back(i, j);
      gens.push_back({"x" + std::to_string(i) + std::to_string(j), m - 1});
    }
  auto ctx = make_context(gens);

  // p_ij(D_A) = Σ (−1)^{|a_l|} p_i(a_l) p_j(a_l′)
  std::vector<MixedElement> d_fiber;
  for (const auto& [i, j] : cs.pairs) {
    SparseVec v;
    for (std::size_t l = 0; l < a.basis.size(); ++l) {
      const auto& x = a.basis[l];
      const auto& y = a.dual[l];
      Rational sign = x.degree % 2 ? -1 : 1;
      v = sv::axpy(v, sign, multiply(*base, x.degree, emb.embed(i, x.degree, x.coeffs), y.degree,
                                     emb.embed(j, y.degree, y.coeffs)));
    }
    d_fiber.push_back(base_mixed(m, v));
  }
  cs.ambient = std::make_shared<const RelativeAlgebra>(base, ctx, d_fiber);
  const auto& R = *cs.ambient;

  std::vector<Cochain> ideal;
  for (std::size_t g = 0; g < cs.pairs.size(); ++g) {
    auto [i, j] = cs.pairs[g];
    MixedElement x = R.fiber_generator(g);
    if ((m - 1) % 2 == 0) {
      int deg = 2 * (m - 1);
      ideal.push_back({deg, R.to_vector(deg, R.mul(x, x))});
    }
    for (int deg = 1; deg <= m; ++deg)
      for (std::size_t e = 0; e < a.algebra->dim(deg); ++e) {
        SparseVec u = sv::unit(static_cast<std::uint32_t>(e));
        SparseVec diff = sv::sub(emb.embed(i, deg, u), emb.embed(j, deg, u));
        int total = deg + m - 1;
        ideal.push_back({total, R.to_vector(total, R.mul(base_mixed(deg, diff), x))});
      }
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int l = j + 1; l <= k; ++l) ideal.push_back(cs.arnold_relation(i, j, l));

  cs.quotient = std::make_shared<const QuotientAlgebra>(cs.ambient, std::move(ideal), opts);
  cs.top_degree = base_top + static_cast<int>(cs.pairs.size()) * (m - 1);
  return cs;
}

}  // namespace rht
