#include "rht/invariants.hpp"

#include <array>

namespace rht {

bool is_combination(int b, const std::vector<int>& a) {
  if (b < 0) return false;
  // reach[v][s]: v is Σ k_λ a_λ with Σ k_λ = s (s capped at 2).
  std::vector<std::array<bool, 3>> reach(static_cast<std::size_t>(b + 1), {false, false, false});
  reach[0][0] = true;
  for (int v = 0; v <= b; ++v)
    for (int s = 0; s < 3; ++s) {
      if (!reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)]) continue;
      for (int x : a)
        if (x > 0 && v + x <= b) reach[static_cast<std::size_t>(v + x)][static_cast<std::size_t>(std::min(s + 1, 2))] = true;
    }
  return reach[static_cast<std::size_t>(b)][2];
}

EllipticCheck elliptic_degrees_check(const DegreeSequence& s) {
  for (int a : s.evens)
    if (a < 1) throw std::invalid_argument("even entries must be at least 1");
  for (int b : s.odds)
    if (b < 1) throw std::invalid_argument("odd entries must be at least 1");
  const std::size_t q = s.evens.size();
  if (q > 24) throw BudgetExceeded("too many even degrees for subsequence enumeration");
  EllipticCheck r;
  for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
    std::vector<int> sub;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < q; ++i)
      if (mask >> i & 1u) {
        sub.push_back(s.evens[i]);
        idx.push_back(i);
      }
    std::size_t count = 0;
    for (int b : s.odds)
      if (is_combination(b, sub)) ++count;
    if (count < sub.size()) {
      r.ok = false;
      r.witness = idx;
      return r;
    }
  }
  return r;
}

}  // namespace rht
