#include "rht/cohomology.hpp"

#include <algorithm>

namespace rht {

SparseVec CohomologyDegree::class_of(const SparseVec& cocycle) const {
  return classes->coordinates(boundaries->reduce(cocycle));
}

CohomologyDegree cohomology_at(const GradedAlgebra& a, int n, const LinalgOptions& opts) {
  CohomologyDegree h;
  h.degree = n;
  h.cochain_dim = a.dim(n);
  auto boundaries = std::make_shared<Echelon>(h.cochain_dim, opts);
  auto classes = std::make_shared<Echelon>(h.cochain_dim, opts);
  if (h.cochain_dim > 0) {
    if (n - 1 >= a.min_degree()) {
      std::size_t prev = a.dim(n - 1);
      for (std::size_t i = 0; i < prev; ++i) {
        SparseVec b = a.differential(n - 1, i);
        if (!b.empty()) boundaries->insert(b);
      }
    }
    LinearSolution ker = solve_linear(differential_matrix(a, n), {}, opts);
    h.cocycle_dim = ker.kernel.size();
    for (const auto& r : boundaries->reduce_all(ker.kernel))
      if (!r.empty()) classes->insert(r);
  }
  h.boundary_dim = boundaries->rank();
  h.representatives = classes->rows();
  h.boundaries = std::move(boundaries);
  h.classes = std::move(classes);
  return h;
}

std::vector<std::size_t> CohomologyReport::betti() const {
  std::vector<std::size_t> b;
  for (const auto& d : degrees) b.push_back(d.dim());
  return b;
}

CohomologyReport cohomology(const GradedAlgebra& a, int lo, int hi, const LinalgOptions& opts) {
  CohomologyReport r;
  r.lo = lo;
  r.hi = hi;
  for (int n = lo; n <= hi; ++n) r.degrees.push_back(cohomology_at(a, n, opts));
  r.vanishes_above = certified_top(a);
  return r;
}

namespace {

// Degree D such that the quotient of a free algebra vanishes in D and above,
// found by a vanishing window of width max generator degree.
std::optional<int> quotient_vanishing_start(const QuotientAlgebra& q, int width, int limit) {
  int zeros = 0;
  for (int n = 0; n <= limit; ++n) {
    if (q.dim(n) == 0) {
      if (++zeros == width) return n - width + 1;
    } else {
      zeros = 0;
    }
  }
  return std::nullopt;
}

constexpr int kWindowLimit = 96;

}  // namespace

std::optional<int> certified_top(const SullivanPresentation& p) {
  const auto& ctx = *p.context();
  if (ctx.size() == 0) return 0;
  bool all_odd = true;
  for (std::size_t g = 0; g < ctx.size(); ++g) all_odd = all_odd && ctx.is_odd(g);
  if (all_odd) {
    int s = 0;
    for (std::size_t g = 0; g < ctx.size(); ++g) s += ctx.degree(g);
    return s;
  }
  // Pure models: d(even) = 0 and d(odd) a polynomial in the even generators.
  std::vector<std::size_t> evens;
  std::vector<std::size_t> remap(ctx.size(), SIZE_MAX);
  for (std::size_t g = 0; g < ctx.size(); ++g) {
    if (ctx.is_odd(g)) continue;
    if (!p.d(g).is_zero()) return std::nullopt;
    remap[g] = evens.size();
    evens.push_back(g);
  }
  std::vector<Generator> even_gens;
  for (auto g : evens) even_gens.push_back(ctx[g]);
  auto ectx = make_context(even_gens);
  auto poly = make_sullivan(SullivanPresentation(ectx, std::vector<AlgElement>(evens.size(), AlgElement(ectx))));
  std::vector<Cochain> ideal;
  int fd = 0;
  for (std::size_t g = 0; g < ctx.size(); ++g) {
    if (!ctx.is_odd(g)) {
      fd -= ctx.degree(g) - 1;
      continue;
    }
    fd += ctx.degree(g);
    for (const auto& [m, c] : p.d(g).terms())
      for (const auto& f : m.factors())
        if (ctx.is_odd(f.gen)) return std::nullopt;
    if (p.d(g).is_zero()) continue;
    ideal.push_back(poly->to_cochain(transport(p.d(g), ectx, remap)));
  }
  QuotientAlgebra q(poly, ideal, {PivotPolicy::LargestIndex, Backend::Parallel});
  if (!quotient_vanishing_start(q, ectx->max_degree(), kWindowLimit)) return std::nullopt;
  return fd;
}

std::optional<int> certified_top(const GradedAlgebra& a) {
  if (auto m = a.max_degree()) return *m;
  if (auto s = dynamic_cast<const SullivanAlgebra*>(&a)) return certified_top(s->presentation());
  if (auto q = dynamic_cast<const QuotientAlgebra*>(&a)) {
    if (auto s = dynamic_cast<const SullivanAlgebra*>(&q->ambient())) {
      int width = std::max(1, s->context()->max_degree());
      if (auto start = quotient_vanishing_start(*q, width, kWindowLimit)) return *start - 1;
    }
  }
  return std::nullopt;
}

EulerCharacteristic euler_characteristic(const GradedAlgebra& a, int n_max, const LinalgOptions& opts) {
  EulerCharacteristic e;
  e.window = n_max;
  for (int n = a.min_degree(); n <= n_max; ++n) {
    long long d = static_cast<long long>(cohomology_at(a, n, opts).dim());
    e.value += (n % 2 == 0) ? d : -d;
  }
  auto top = certified_top(a);
  e.exact = top && *top <= n_max;
  return e;
}

RationalMatrix cohomology_map(const Morphism& f, int n, const CohomologyDegree& src, const CohomologyDegree& dst) {
  std::vector<SparseVec> cols;
  for (const auto& rep : src.representatives) cols.push_back(dst.class_of(f.apply(n, rep)));
  return RationalMatrix::from_columns(dst.dim(), std::move(cols));
}

QuasiIsoReport is_quasi_iso(const Morphism& f, int n_max, const LinalgOptions& opts) {
  QuasiIsoReport r;
  int lo = std::min(f.source().min_degree(), f.target().min_degree());
  for (int n = lo; n <= n_max; ++n) {
    auto hs = cohomology_at(f.source(), n, opts);
    auto ht = cohomology_at(f.target(), n, opts);
    QuasiIsoWitness w;
    w.degree = n;
    w.source_dim = hs.dim();
    w.target_dim = ht.dim();
    auto m = cohomology_map(f, n, hs, ht);
    w.rank = rank_of(m.columns(), m.rows(), opts);
    r.degrees.push_back(w);
    if (!w.iso() && r.ok) {
      r.ok = false;
      r.first_failure = n;
    }
  }
  return r;
}

}  // namespace rht
