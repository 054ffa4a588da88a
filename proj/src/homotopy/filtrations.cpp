#include "rht/homotopy_lie.hpp"

namespace rht {

namespace {

// Span of [L_0, S] inside L_q.
std::vector<SparseVec> bracket_with_l0(const LieTable& t, int q, const std::vector<SparseVec>& s,
                                       const LinalgOptions& opts) {
  Echelon e(t.dim(q), opts);
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (const auto& y : s) e.insert(t.bracket(0, sv::unit(static_cast<std::uint32_t>(i)), q, y));
  return e.rows();
}

}  // namespace

int nilpotency_class(const LieTable& t, int depth) {
  if (t.dim(0) == 0) return 0;
  std::vector<SparseVec> cur;
  for (std::size_t i = 0; i < t.dim(0); ++i) cur.push_back(sv::unit(static_cast<std::uint32_t>(i)));
  for (int r = 1; r <= depth; ++r) {
    auto next = bracket_with_l0(t, 0, cur, {});
    if (next.empty()) return r;
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  throw NotNilpotent("L_0 is not nilpotent");
}

FiltrationReport lcs_filtrations(const SullivanPresentation& p, int k, int depth, const LinalgOptions& opts) {
  if (k < 1) throw OutOfBound("filtration degree must be at least 1");
  const auto& ctx = *p.context();
  FiltrationReport rep;
  rep.k = k;
  std::vector<std::size_t> vk, v1;
  for (std::size_t g = 0; g < ctx.size(); ++g) {
    if (ctx.degree(g) == k) vk.push_back(g);
    if (ctx.degree(g) == 1) v1.push_back(g);
  }

  // δ: V^k → V¹ ∧ V^k, in coordinates of the monomials u·w.
  std::map<Monomial, std::uint32_t> slot;
  auto coords = [&](const AlgElement& x) {
    std::vector<std::pair<std::uint32_t, Rational>> e;
    for (const auto& [m, c] : x.terms()) {
      if (m.word_length() != 2) continue;
      auto f = m.factors();
      std::uint32_t a = f[0].gen, b = f.size() == 1 ? f[0].gen : f[1].gen;
      bool ok = (ctx.degree(a) == 1 && ctx.degree(b) == k) || (ctx.degree(b) == 1 && ctx.degree(a) == k);
      if (!ok) continue;
      auto [it, fresh] = slot.try_emplace(m, static_cast<std::uint32_t>(slot.size()));
      e.emplace_back(it->second, c);
    }
    return sv::collect(std::move(e));
  };
  std::vector<SparseVec> delta;
  for (auto g : vk) delta.push_back(coords(p.d(g)));

  std::vector<SparseVec> cur;  // basis of V^k_r in V^k coordinates
  bool first = true;
  for (int r = 0; r <= depth; ++r) {
    // For k = 1 the target is Λ²V¹_r; for k ≥ 2 it is V¹ ∧ V^k_r.
    auto element = [&](const SparseVec& w) {
      AlgElement x(p.context());
      for (const auto& [j, c] : w) x += AlgElement::generator(p.context(), vk[j]) * c;
      return x;
    };
    std::vector<AlgElement> left;
    if (k == 1)
      for (const auto& w : cur) left.push_back(element(w));
    else
      for (auto u : v1) left.push_back(AlgElement::generator(p.context(), u));
    std::vector<SparseVec> span;
    for (const auto& u : left)
      for (const auto& w : cur) span.push_back(coords(u * element(w)));
    // Preimage: kernel of [δ | −span], first |V^k| coordinates.
    std::vector<SparseVec> cols = delta;
    for (const auto& s : span) cols.push_back(sv::scale(s, -1));
    auto sol = solve_linear(RationalMatrix::from_columns(slot.size(), cols), {}, opts);
    Echelon e(vk.size(), opts);
    for (const auto& kv : sol.kernel) {
      SparseVec head;
      for (const auto& [i, c] : kv)
        if (i < vk.size()) head.emplace_back(i, c);
      e.insert(head);
    }
    std::vector<SparseVec> next = e.rows();
    if (!first && next.size() == cur.size()) break;
    first = false;
    cur = std::move(next);
    rep.v_dims.push_back(cur.size());
    if (cur.size() == vk.size()) {
      rep.nil_v = r + 1;
      break;
    }
  }
  if (vk.empty()) rep.nil_v = 0;

  LieTable t(p, k - 1);
  std::vector<SparseVec> lcs;
  for (std::size_t i = 0; i < t.dim(k - 1); ++i) lcs.push_back(sv::unit(static_cast<std::uint32_t>(i)));
  if (lcs.empty()) {
    rep.nil_l = 0;
    return rep;
  }
  for (int r = 1; r <= depth; ++r) {
    rep.lcs_dims.push_back(lcs.size());
    auto next = bracket_with_l0(t, k - 1, lcs, opts);
    if (next.empty()) {
      rep.nil_l = r;
      break;
    }
    if (next.size() == lcs.size()) break;
    lcs = std::move(next);
  }
  return rep;
}

}  // namespace rht
