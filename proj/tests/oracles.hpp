#pragma once

// Reference computations shared by the unit tests and the acceptance run.
// They use dense Gauss-Jordan and direct enumeration only.

#include "helpers.hpp"
#include "rht/invariants.hpp"

#include <array>
#include <functional>
#include <map>
#include <tuple>

namespace rht::testing {

// Largest k with I^k != 0 for I = ker(μ : H⊗H → H), computed by dense
// elimination on the pair basis of H⊗H.
inline int brute_force_tc(const FiniteCDGA& h) {
  const int top = h.top_degree();
  struct Elem {
    int deg;
    std::vector<Rational> v;  // over pairs (p, i, q, j), flattened below
  };
  std::vector<std::tuple<int, std::size_t, int, std::size_t>> pairs;
  std::map<std::tuple<int, std::size_t, int, std::size_t>, std::size_t> index;
  for (int p = 0; p <= top; ++p)
    for (int q = 0; q <= top; ++q)
      for (std::size_t i = 0; i < h.dim(p); ++i)
        for (std::size_t j = 0; j < h.dim(q); ++j) {
          index[{p, i, q, j}] = pairs.size();
          pairs.emplace_back(p, i, q, j);
        }
  const std::size_t N = pairs.size();
  std::vector<Elem> kernel;
  for (int n = 1; n <= 2 * top; ++n) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < N; ++k)
      if (std::get<0>(pairs[k]) + std::get<2>(pairs[k]) == n) cols.push_back(k);
    std::size_t rows = n <= top ? h.dim(n) : 0;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto [p, i, q, j] = pairs[cols[c]];
      if (n <= top)
        for (const auto& [r, x] : h.product(p, i, q, j)) m[r][c] = x;
    }
    for (const auto& kv : dense_nullspace(m, cols.size())) {
      std::vector<Rational> v(N);
      for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = kv[c];
      kernel.push_back({n, v});
    }
  }
  // Product table on the pair basis: (a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table(N * N);
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t) {
      auto [p, i, q, j] = pairs[s];
      auto [p2, i2, q2, j2] = pairs[t];
      if (p + p2 > top || q + q2 > top) continue;
      int sign = (q * p2) % 2 ? -1 : 1;
      for (const auto& [a, ca] : h.product(p, i, p2, i2))
        for (const auto& [b, cb] : h.product(q, j, q2, j2))
          table[s * N + t].emplace_back(index[{p + p2, a, q + q2, b}], ca * cb * sign);
    }
  auto mul = [&](const Elem& x, const Elem& y) {
    Elem z{x.deg + y.deg, std::vector<Rational>(N)};
    for (std::size_t s = 0; s < N; ++s) {
      if (x.v[s] == 0) continue;
      for (std::size_t t = 0; t < N; ++t) {
        if (y.v[t] == 0) continue;
        for (const auto& [u, c] : table[s * N + t]) z.v[u] += x.v[s] * y.v[t] * c;
      }
    }
    return z;
  };
  std::vector<std::size_t> kernel_dim(static_cast<std::size_t>(2 * top + 1));
  for (const auto& e : kernel) ++kernel_dim[static_cast<std::size_t>(e.deg)];
  // I^{k+1} is spanned by products of a basis of I^k with a basis of I.
  // Degrees where I^{k+1} already fills I need no further products.
  std::vector<Elem> power = kernel;
  int k = power.empty() ? 0 : 1;
  while (!power.empty()) {
    std::vector<std::map<std::size_t, std::vector<Rational>>> echelon(kernel_dim.size());
    std::vector<Elem> next;
    for (const auto& x : power)
      for (const auto& y : kernel) {
        int n = x.deg + y.deg;
        if (n > 2 * top || echelon[static_cast<std::size_t>(n)].size() == kernel_dim[static_cast<std::size_t>(n)]) continue;
        auto z = mul(x, y);
        auto& ech = echelon[static_cast<std::size_t>(n)];
        for (const auto& [piv, row] : ech)
          if (z.v[piv] != 0) {
            Rational f = z.v[piv] / row[piv];
            for (std::size_t c = 0; c < N; ++c)
              if (row[c] != 0) z.v[c] -= f * row[c];
          }
        std::size_t piv = 0;
        while (piv < N && z.v[piv] == 0) ++piv;
        if (piv == N) continue;
        ech[piv] = z.v;
        next.push_back(std::move(z));
      }
    if (next.empty()) break;
    power = std::move(next);
    ++k;
  }
  return k;
}

// Direct enumeration of k-vectors.
inline bool combination_oracle(int b, const std::vector<int>& a) {
  std::function<bool(std::size_t, int, int)> rec = [&](std::size_t i, int rest, int count) {
    if (i == a.size()) return rest == 0 && count >= 2;
    for (int k = 0; k * a[i] <= rest; ++k)
      if (rec(i + 1, rest - k * a[i], count + k)) return true;
    return false;
  };
  return rec(0, b, 0);
}

inline bool elliptic_oracle(const DegreeSequence& s) {
  std::size_t q = s.evens.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << q); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < q; ++i)
      if (mask >> i & 1) sub.push_back(s.evens[i]);
    std::size_t count = 0;
    for (int b : s.odds) count += combination_oracle(b, sub);
    if (count < sub.size()) return false;
  }
  return true;
}

inline std::vector<DegreeSequence> all_sequences(int budget) {
  std::vector<DegreeSequence> out;
  std::vector<int> evens;
  std::function<void(int, int)> odds_rec;
  std::vector<int> odds;
  odds_rec = [&](int min_b, int left) {
    out.push_back({evens, odds});
    for (int b = min_b; 2 * b - 1 <= left; ++b) {
      odds.push_back(b);
      odds_rec(b, left - (2 * b - 1));
      odds.pop_back();
    }
  };
  std::function<void(int, int)> evens_rec = [&](int min_a, int left) {
    odds_rec(1, left);
    for (int a = min_a; 2 * a <= left; ++a) {
      evens.push_back(a);
      evens_rec(a, left - 2 * a);
      evens.pop_back();
    }
  };
  evens_rec(1, budget);
  return out;
}

// Betti numbers of a free model from dense matrices built by monomial
// enumeration, independent of the library's cohomology code.
inline std::vector<std::size_t> brute_betti(const SullivanPresentation& p, int n) {
  const auto& ctx = *p.context();
  std::vector<std::vector<Monomial>> basis;
  for (int k = 0; k <= n + 1; ++k) basis.push_back(degree_basis(ctx, k));
  std::vector<std::size_t> rank(n + 2, 0);
  for (int k = 0; k <= n; ++k) {
    const auto& src = basis[k];
    const auto& dst = basis[k + 1];
    std::vector<std::vector<Rational>> m(dst.size(), std::vector<Rational>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
      auto img = p.apply_d(AlgElement::monomial(p.context(), src[j]));
      for (std::size_t i = 0; i < dst.size(); ++i) m[i][j] = img.coefficient(dst[i]);
    }
    rank[k] = dense_rank(m);
  }
  std::vector<std::size_t> b;
  for (int k = 0; k <= n; ++k) b.push_back(basis[k].size() - rank[k] - (k > 0 ? rank[k - 1] : 0));
  return b;
}

// dim L_k of the free graded Lie algebra on two degree-1 generators, by
// inverting the PBW product against dim T(V)_k = 2^k.
inline std::vector<long long> free_lie_dims(int kmax) {
  std::vector<long long> l(static_cast<std::size_t>(kmax + 1), 0);
  for (int k = 1; k <= kmax; ++k) {
    std::vector<long long> series(static_cast<std::size_t>(k + 1), 0);
    series[0] = 1;
    for (int j = 1; j < k; ++j)
      for (long long c = 0; c < l[static_cast<std::size_t>(j)]; ++c) {
        std::vector<long long> next(series.size(), 0);
        for (int e = 0; e <= k; ++e) {
          if (series[static_cast<std::size_t>(e)] == 0) continue;
          if (j % 2) {
            next[static_cast<std::size_t>(e)] += series[static_cast<std::size_t>(e)];
            if (e + j <= k) next[static_cast<std::size_t>(e + j)] += series[static_cast<std::size_t>(e)];
          } else {
            for (int f = e; f <= k; f += j) next[static_cast<std::size_t>(f)] += series[static_cast<std::size_t>(e)];
          }
        }
        series = next;
      }
    l[static_cast<std::size_t>(k)] = (1LL << k) - series[static_cast<std::size_t>(k)];
  }
  return l;
}

// Degree-1 model dual to a nilpotent Lie algebra with [e_p, e_q] = e_v for
// each listed (p, q, v), p < q: d ξ_v = ξ_p ξ_q.
inline SullivanPresentation lie_model(std::size_t n, const std::vector<std::array<std::size_t, 3>>& brackets) {
  std::vector<Generator> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back({"e" + std::to_string(i), 1});
  auto c = make_context(g);
  std::vector<AlgElement> d(n, AlgElement(c));
  for (auto [p, q, v] : brackets) d[v] += AlgElement::generator(c, p) * AlgElement::generator(c, q);
  return SullivanPresentation(c, d);
}

// Hand evaluation of ⟨v∧w; f, g⟩ for generators v, w (degrees dv, dw) and
// dual elements f = s x_i, g = s x_j, straight from the printed formula.
inline int pairing(std::size_t v, int dv, std::size_t w, int dw, std::size_t i, std::size_t j) {
  int vg = v == j, wf = w == i, vf = v == i, wg = w == j;
  int sign = (dv * dw) % 2 ? -1 : 1;
  return vg * wf + sign * vf * wg;
}

}  // namespace rht::testing
