#include "rht/invariants.hpp"

namespace rht {

FinitePtr cohomology_algebra(const GradedAlgebra& a, int lo, int hi, const LinalgOptions& opts) {
  std::map<int, CohomologyDegree> H;
  std::map<int, std::vector<SparseVec>> reps;
  Rational unit_scale = 1;  // unit = unit_scale · (old representative 0) in degree 0
  bool unit_basis = false;
  for (int n = lo; n <= hi; ++n) {
    H[n] = cohomology_at(a, n, opts);
    reps[n] = H[n].representatives;
  }
  auto u = a.unit_index();
  if (lo <= 0 && hi >= 0 && u && H[0].dim() == 1) {
    SparseVec c = H[0].class_of(sv::unit(static_cast<std::uint32_t>(*u)));
    if (!c.empty()) {
      unit_scale = c[0].second;
      reps[0][0] = sv::unit(static_cast<std::uint32_t>(*u));
      unit_basis = true;
    }
  }
  auto coords = [&](int n, const SparseVec& z) {
    SparseVec c = H[n].class_of(z);
    if (n == 0 && unit_basis) c = sv::scale(c, Rational(1) / unit_scale);
    return c;
  };

  FiniteCDGA::Builder b;
  std::map<int, std::vector<FiniteCDGA::Ref>> refs;
  for (int n = lo; n <= hi; ++n)
    for (const auto& r : reps[n]) refs[n].push_back(b.add(n, "[" + format_vector(a, n, r) + "]"));
  if (unit_basis) b.set_unit(refs[0][0]);
  for (int p = lo; p <= hi; ++p)
    for (int q = lo; p + q <= hi; ++q) {
      if (p + q < lo) continue;
      for (std::size_t i = 0; i < reps[p].size(); ++i)
        for (std::size_t j = 0; j < reps[q].size(); ++j) {
          if (unit_basis && ((p == 0 && i == 0) || (q == 0 && j == 0))) continue;
          SparseVec prod = multiply(a, p, reps[p][i], q, reps[q][j]);
          SparseVec c = coords(p + q, prod);
          if (!c.empty()) b.set_product(refs[p][i], refs[q][j], c);
        }
    }
  return std::make_shared<const FiniteCDGA>(b.build());
}

bool satisfies_poincare_duality(const FiniteCDGA& h) {
  int m = -1;
  for (int n = h.min_degree(); n <= h.top_degree(); ++n)
    if (h.dim(n) > 0) m = n;
  if (m < 0 || h.dim(m) != 1 || h.dim(0) != 1) return false;
  for (int k = 0; k <= m; ++k) {
    if (h.dim(k) != h.dim(m - k)) return false;
    std::vector<SparseVec> rows;
    for (std::size_t i = 0; i < h.dim(k); ++i) {
      SparseVec row;
      for (std::size_t j = 0; j < h.dim(m - k); ++j) {
        Rational c = sv::get(h.product(k, i, m - k, j), 0);
        if (c != 0) row.emplace_back(static_cast<std::uint32_t>(j), c);
      }
      rows.push_back(row);
    }
    if (rank_of(rows, h.dim(m - k)) != h.dim(k)) return false;
  }
  return true;
}

ToomerResult toomer_invariant(const SullivanPresentation& p, int word_bound, int window, const LinalgOptions& opts,
                              Budget budget) {
  auto S = make_sullivan(p, budget);
  auto top = certified_top(p);
  ToomerResult r;
  r.window = window >= 0 ? window : (top ? *top : budget.default_degree);
  r.word_bound = word_bound >= 0 ? word_bound : (top ? *top : 12);
  r.exact = top && *top <= r.window;

  struct Slice {
    CohomologyDegree H;
    std::vector<std::uint32_t> words;      // word length per basis element
    std::vector<std::uint32_t> prev_words;
    RationalMatrix d_prev;                 // d: degree k−1 → k
  };
  std::vector<Slice> slices;
  for (int k = 1; k <= r.window; ++k) {
    Slice s;
    s.H = cohomology_at(*S, k, opts);
    if (s.H.dim() == 0) continue;
    for (const auto& m : S->basis(k)) s.words.push_back(m.word_length());
    for (const auto& m : S->basis(k - 1)) s.prev_words.push_back(m.word_length());
    s.d_prev = differential_matrix(*S, k - 1);
    slices.push_back(std::move(s));
  }
  for (int m = 0; m <= r.word_bound; ++m) {
    bool injective = true;
    for (const auto& s : slices) {
      auto truncate = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [i, c] : v)
          if (s.words[i] <= static_cast<std::uint32_t>(m)) out.emplace_back(i, c);
        return out;
      };
      Echelon e(s.words.size(), opts);
      for (std::size_t j = 0; j < s.prev_words.size(); ++j)
        if (s.prev_words[j] <= static_cast<std::uint32_t>(m)) e.insert(truncate(s.d_prev.column(j)));
      std::size_t independent = 0;
      for (const auto& rep : s.H.representatives)
        if (e.insert(truncate(rep))) ++independent;
      if (independent != s.H.dim()) {
        injective = false;
        break;
      }
    }
    if (injective) {
      r.e = m;
      break;
    }
  }
  return r;
}

CatBounds cat_bounds(const SullivanPresentation& p, int window, const LinalgOptions& opts, Budget budget) {
  CatBounds cb;
  auto t = toomer_invariant(p, -1, window, opts, budget);
  cb.lower = t.e;
  cb.window = t.window;
  auto top = certified_top(p);
  if (!top) return cb;
  auto S = make_sullivan(p, budget);
  int n = 0;
  for (int k = 0; k <= *top; ++k)
    if (cohomology_at(*S, k, opts).dim() > 0) n = k;
  cb.upper = n;
  auto H = cohomology_algebra(*S, 0, n, opts);
  cb.poincare_duality = satisfies_poincare_duality(*H);
  if (cb.poincare_duality && cb.lower && t.exact) cb.exact = cb.lower;
  return cb;
}

}  // namespace rht
