#include "rht/invariants.hpp"

#include <cmath>

namespace rht {

const char* to_string(GrowthEvidence g) {
  switch (g) {
    case GrowthEvidence::Elliptic: return "elliptic-evidence";
    case GrowthEvidence::Hyperbolic: return "hyperbolic-evidence";
    default: return "inconclusive";
  }
}

TrichotomyReport trichotomy_report(const std::map<int, std::size_t>& ranks, bool cohomology_finite, int window) {
  TrichotomyReport r;
  r.window = window;
  r.cohomology_finite = cohomology_finite;
  for (int k = 1; k <= window; ++k) {
    auto it = ranks.find(k);
    std::size_t rk = it == ranks.end() ? 0 : it->second;
    r.ranks[k] = rk;
    r.chi_pi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(rk);
    if (rk > 0) r.alpha_estimate = std::max(r.alpha_estimate, std::log(static_cast<double>(rk)) / k);
  }
  int third = (window + 2) / 3;
  bool quiet = true;
  for (int k = window - third + 1; k <= window; ++k)
    if (k >= 1 && r.ranks[k] > 0) quiet = false;
  if (quiet && cohomology_finite) {
    r.evidence = GrowthEvidence::Elliptic;
    return r;
  }
  // Cumulative ranks over the last half-window must dominate S_m·(11/10)^{k−m}.
  int m = (window + 1) / 2;
  std::vector<mpz_class> S(static_cast<std::size_t>(window + 1), 0);
  for (int k = 1; k <= window; ++k) S[static_cast<std::size_t>(k)] = S[static_cast<std::size_t>(k - 1)] + r.ranks[k];
  bool growing = m >= 1 && m < window && S[static_cast<std::size_t>(m)] > 0;
  for (int k = m + 1; growing && k <= window; ++k) {
    mpz_class lhs = S[static_cast<std::size_t>(k)], rhs = S[static_cast<std::size_t>(m)];
    for (int j = 0; j < k - m; ++j) {
      lhs *= 10;
      rhs *= 11;
    }
    if (lhs < rhs) growing = false;
  }
  if (growing) r.evidence = GrowthEvidence::Hyperbolic;
  return r;
}

TrichotomyReport trichotomy_report(const MinimalModelResult& m, int window) {
  bool finite = certified_top(m.model).has_value();
  if (!finite && m.phi.target_ptr()) finite = certified_top(m.phi.target()).has_value();
  return trichotomy_report(generator_counts(m.model, window), finite, window);
}

int tc_cup_length(const FiniteCDGA& h) {
  if (!h.has_zero_differential()) throw std::invalid_argument("TC cup length needs zero differential");
  auto H = std::make_shared<const FiniteCDGA>(h);
  TensorAlgebra HH(H, H);
  const int top = h.top_degree();
  std::map<int, std::vector<SparseVec>> K;
  for (int n = 1; n <= 2 * top; ++n) {
    std::vector<SparseVec> cols;
    for (const auto& t : HH.basis(n)) cols.push_back(n <= top ? h.product(t.p, t.i, t.q, t.j) : SparseVec{});
    auto sol = solve_linear(RationalMatrix::from_columns(n <= top ? h.dim(n) : 0, cols));
    if (!sol.kernel.empty()) K[n] = sol.kernel;
  }
  if (K.empty()) return 0;
  int length = 1;
  auto cur = K;
  for (;;) {
    std::map<int, std::vector<SparseVec>> next;
    for (const auto& [p, ks] : K)
      for (const auto& [q, xs] : cur) {
        if (p + q > 2 * top) continue;
        Echelon e(HH.dim(p + q));
        for (const auto& v : next[p + q]) e.insert(v);
        for (const auto& k : ks)
          for (const auto& x : xs) e.insert(multiply(HH, p, k, q, x));
        next[p + q] = e.rows();
      }
    std::erase_if(next, [](const auto& kv) { return kv.second.empty(); });
    if (next.empty()) return length;
    ++length;
    cur = std::move(next);
  }
}

std::vector<mpz_class> loop_homology_dims(const std::map<int, std::size_t>& lie_dims, int n) {
  std::vector<mpz_class> s(static_cast<std::size_t>(n + 1), 0);
  s[0] = 1;
  for (const auto& [k, l] : lie_dims) {
    if (k == 0 && l > 0) throw UnsupportedInput("loop homology needs L_0 = 0; UL_0 is infinite-dimensional");
    if (k < 1 || k > n) continue;
    for (std::size_t c = 0; c < l; ++c) {
      if (k % 2) {
        for (int e = n; e >= k; --e) s[static_cast<std::size_t>(e)] += s[static_cast<std::size_t>(e - k)];
      } else {
        for (int e = k; e <= n; ++e) s[static_cast<std::size_t>(e)] += s[static_cast<std::size_t>(e - k)];
      }
    }
  }
  return s;
}

std::map<int, std::size_t> lie_dims_from_model(const SullivanPresentation& p, int n) {
  auto counts = generator_counts(p, n + 1);
  std::map<int, std::size_t> l;
  for (int k = 0; k <= n; ++k) l[k] = counts[k + 1];
  return l;
}

}  // namespace rht
