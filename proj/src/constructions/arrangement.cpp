#include "rht/constructions.hpp"

#include <bit>

namespace rht {

namespace {

constexpr std::size_t kMaxSubspaces = 16;

// Dense reduced row echelon form; unique for a given row space.
std::vector<std::vector<Rational>> rref(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<std::vector<Rational>> stacked(const SubspaceArrangement& arr, std::uint32_t mask) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < arr.subspaces.size(); ++i)
    if (mask >> i & 1) rows.insert(rows.end(), arr.subspaces[i].begin(), arr.subspaces[i].end());
  return rows;
}

void check(const SubspaceArrangement& arr) {
  if (arr.ambient < 0) throw std::invalid_argument("arrangement ambient dimension must be nonnegative");
  if (arr.subspaces.size() > kMaxSubspaces)
    throw BudgetExceeded("arrangement has more than " + std::to_string(kMaxSubspaces) + " subspaces");
  for (const auto& s : arr.subspaces)
    for (const auto& row : s)
      if (row.size() != static_cast<std::size_t>(arr.ambient))
        throw std::invalid_argument("arrangement equation has " + std::to_string(row.size()) +
                                    " entries, ambient dimension is " + std::to_string(arr.ambient));
}

std::string subset_label(std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string s = "X{";
  bool first = true;
  for (std::uint32_t i = 0; mask >> i; ++i)
    if (mask >> i & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

}  // namespace

IntersectionLattice intersection_lattice(const SubspaceArrangement& arr) {
  check(arr);
  const std::uint32_t count = 1u << arr.subspaces.size();
  const std::size_t n = static_cast<std::size_t>(arr.ambient);
  IntersectionLattice lat;
  lat.codim.assign(count, 0);
  std::vector<std::vector<std::vector<Rational>>> forms(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t m = 0; m < static_cast<std::int64_t>(count); ++m) {
    forms[m] = rref(stacked(arr, static_cast<std::uint32_t>(m)), n);
    lat.codim[m] = static_cast<int>(forms[m].size());
  }
  std::map<std::vector<std::vector<Rational>>, std::size_t> seen;
  for (std::uint32_t m = 0; m < count; ++m) {
    auto [it, fresh] = seen.emplace(forms[m], lat.flats.size());
    if (fresh) lat.flats.push_back({lat.codim[m], {}});
    lat.flats[it->second].subsets.push_back(m);
  }
  std::stable_sort(lat.flats.begin(), lat.flats.end(), [](const auto& a, const auto& b) { return a.codim < b.codim; });
  return lat;
}

FinitePtr arrangement_complex(const SubspaceArrangement& arr) {
  auto lat = intersection_lattice(arr);
  const std::uint32_t count = static_cast<std::uint32_t>(lat.codim.size());
  auto degree = [&](std::uint32_t m) { return 2 * lat.codim[m] - std::popcount(m); };

  std::vector<std::uint32_t> order(count);
  for (std::uint32_t m = 0; m < count; ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degree(a) < degree(b); });
  FiniteCDGA::Builder b;
  std::vector<FiniteCDGA::Ref> ref(count);
  for (auto m : order) ref[m] = b.add(degree(m), subset_label(m));
  b.set_unit(ref[0]);

  for (std::uint32_t s = 1; s < count; ++s) {
    // d(σ) = Σ (−1)^pos σ∖{X_i} over i with ∩σ = ∩(σ∖{X_i}), positions from 1
    std::vector<std::pair<std::uint32_t, Rational>> e;
    int pos = 0;
    for (std::uint32_t i = 0; s >> i; ++i) {
      if (!(s >> i & 1)) continue;
      ++pos;
      std::uint32_t t = s & ~(1u << i);
      if (lat.codim[t] == lat.codim[s])
        e.emplace_back(static_cast<std::uint32_t>(ref[t].index), pos % 2 ? Rational(-1) : Rational(1));
    }
    if (!e.empty()) b.set_differential(ref[s], sv::collect(e));
  }
  for (std::uint32_t s = 1; s < count; ++s)
    for (std::uint32_t t = 1; t < count; ++t) {
      if (s & t) continue;
      if (lat.codim[s] + lat.codim[t] != lat.codim[s | t]) continue;
      // shuffle sign: pairs (a ∈ σ, b ∈ τ) with a > b
      int inversions = 0;
      for (std::uint32_t i = 0; t >> i; ++i)
        if (t >> i & 1) inversions += std::popcount(s >> (i + 1));
      b.set_product(ref[s], ref[t], {{static_cast<std::uint32_t>(ref[s | t].index), inversions % 2 ? -1 : 1}});
    }
  return std::make_shared<const FiniteCDGA>(b.build());
}

}  // namespace rht
