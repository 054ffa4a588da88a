#include "rht/minimal_model.hpp"

#include <algorithm>
#include <numeric>

namespace rht {

LambdaExtension make_extension(SullivanPresentation base, SullivanPresentation total) {
  const auto& bctx = *base.context();
  const auto& tctx = *total.context();
  const std::size_t nw = bctx.size();
  if (tctx.size() < nw) throw InvalidExtension("total presentation is smaller than its base");
  for (std::size_t i = 0; i < nw; ++i) {
    if (!(bctx[i] == tctx[i])) throw InvalidExtension("total presentation must list the base generators first");
    if (!(widen(base.d(i), total.context()) == total.d(i)))
      throw InvalidExtension("differential of base generator '" + bctx[i].name + "' differs in the total algebra");
  }
  LambdaExtension ext{std::move(base), std::move(total), {}};
  const std::size_t nz = tctx.size() - nw;
  ext.filtration.assign(nz, -1);
  // For each degree p, peel off the Z^p generators whose differential only
  // involves Z^{<p} and already placed Z^p generators.
  std::vector<int> degrees;
  for (std::size_t k = 0; k < nz; ++k) degrees.push_back(tctx.degree(nw + k));
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int p : degrees) {
    for (int r = 0;; ++r) {
      std::vector<std::size_t> level;
      bool remaining = false;
      for (std::size_t k = 0; k < nz; ++k) {
        if (tctx.degree(nw + k) != p || ext.filtration[k] >= 0) continue;
        remaining = true;
        bool ok = true;
        for (const auto& [m, c] : ext.total.d(nw + k).terms())
          for (const auto& f : m.factors()) {
            if (f.gen < nw) continue;
            int dz = tctx.degree(f.gen);
            if (dz > p || (dz == p && ext.filtration[f.gen - nw] < 0)) ok = false;
          }
        if (ok) level.push_back(k);
      }
      if (!remaining) break;
      if (level.empty()) throw InvalidExtension("fiber generators admit no nilpotent filtration");
      for (auto k : level) ext.filtration[k] = r;
    }
  }
  return ext;
}

LambdaExtension pushout_extension(const Morphism& phi, const LambdaExtension& ext) {
  auto src = phi.sullivan_source();
  auto tgt = std::dynamic_pointer_cast<const SullivanAlgebra>(phi.target_ptr());
  if (!src || !tgt) throw std::invalid_argument("pushout needs a morphism of Sullivan algebras given on generators");
  if (!(src->presentation() == ext.base)) throw std::invalid_argument("morphism source is not the extension's base");
  const auto& V = tgt->presentation();
  const std::size_t nv = V.size();
  const std::size_t nw = ext.base.size();
  const auto& tctx = *ext.total.context();

  std::vector<Generator> gens = V.context()->generators();
  std::vector<std::size_t> zmap;
  for (std::size_t k = nw; k < tctx.size(); ++k) {
    GeneratorContext sofar(gens);
    gens.push_back({unique_name(sofar, tctx[k].name), tctx[k].degree});
    zmap.push_back(nv + (k - nw));
  }
  auto ctx = make_context(gens);
  std::vector<AlgElement> d;
  for (const auto& x : V.differentials()) d.push_back(widen(x, ctx));
  const auto& wctx = *ext.base.context();
  for (std::size_t k = nw; k < tctx.size(); ++k) {
    AlgElement img(ctx);
    for (const auto& [m, c] : ext.total.d(k).terms()) {
      std::vector<Monomial::Factor> wf, zf;
      for (const auto& f : m.factors()) {
        if (f.gen < nw)
          wf.push_back(f);
        else
          zf.push_back({static_cast<std::uint32_t>(zmap[f.gen - nw]), f.exp});
      }
      Monomial wm = Monomial::from_factors(wf);
      int wdeg = wm.degree(wctx);
      SparseVec phw = phi.apply(wdeg, sv::unit(static_cast<std::uint32_t>(*src->index_of(wdeg, wm))));
      if (phw.empty()) continue;
      AlgElement left = widen(tgt->to_element(wdeg, phw), ctx);
      AlgElement right = AlgElement::monomial(ctx, Monomial::from_factors(zf), c);
      img += multiply(left, right);
    }
    d.push_back(std::move(img));
  }
  SullivanPresentation total(ctx, std::move(d));
  LambdaExtension out = make_extension(V, total);
  for (std::size_t k = 0; k < out.filtration.size(); ++k)
    if (out.filtration[k] > ext.filtration[k]) throw std::logic_error("pushout raised a filtration index");
  return out;
}

SullivanPresentation fiber_model(const LambdaExtension& ext) {
  const auto& tctx = *ext.total.context();
  const std::size_t nw = ext.fiber_offset();
  std::vector<Generator> gens(tctx.generators().begin() + static_cast<std::ptrdiff_t>(nw), tctx.generators().end());
  auto ctx = make_context(gens);
  std::vector<AlgElement> d;
  for (std::size_t k = nw; k < tctx.size(); ++k) {
    AlgElement x(ctx);
    for (const auto& [m, c] : ext.total.d(k).terms()) {
      if (m.contains_any_below(static_cast<std::uint32_t>(nw))) continue;
      std::vector<Monomial::Factor> f;
      for (const auto& e : m.factors()) f.push_back({static_cast<std::uint32_t>(e.gen - nw), e.exp});
      x.add_term(Monomial::from_factors(f), c);
    }
    d.push_back(std::move(x));
  }
  return SullivanPresentation(ctx, std::move(d));
}

AcyclicClosure acyclic_closure(const SullivanPresentation& p, int max_degree, const LinalgOptions& opts,
                               Budget budget) {
  const auto& vctx = *p.context();
  const std::size_t nv = vctx.size();
  for (std::size_t g = 0; g < nv; ++g)
    if (vctx.degree(g) < 2)
      throw UnsupportedInput("acyclic closure needs generators of degree >= 2 (degree-1 generator '" + vctx[g].name +
                             "' would need a degree-0 partner)");
  if (!is_minimal(p)) throw UnsupportedInput("acyclic closure needs a minimal model");

  std::vector<std::size_t> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return vctx.degree(a) < vctx.degree(b); });

  SullivanPresentation total = p;
  AcyclicClosure out;
  for (std::size_t v : order) {
    const int n = vctx.degree(v);
    auto T = make_sullivan(total, budget);
    const auto& basis = T->basis(n);
    std::vector<SparseVec> cols;
    std::vector<std::size_t> allowed;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Monomial& m = basis[i];
      if (m.word_length() < 2 || !m.contains_any_below(static_cast<std::uint32_t>(nv))) continue;
      allowed.push_back(i);
      cols.push_back(T->differential(n, i));
    }
    auto M = RationalMatrix::from_columns(T->dim(n + 1), cols);
    SparseVec target = T->to_vector(n + 1, widen(p.d(v), total.context()));
    auto sol = solve_linear(M, std::vector<SparseVec>{target}, opts);
    if (!sol.solutions[0]) throw std::logic_error("acyclic closure: d(" + vctx[v].name + ") has no primitive");
    AlgElement eta(total.context());
    for (const auto& [j, c] : *sol.solutions[0]) eta.add_term(basis[allowed[j]], c);

    std::string name = unique_name(*total.context(), "bar_" + vctx[v].name);
    std::vector<Generator> all = total.context()->generators();
    all.push_back({name, n - 1});
    auto ctx = make_context(all);
    AlgElement du = widen(total.generator(v) - eta, ctx);
    total = with_generators(total, {{name, n - 1}}, {du});
    out.alpha.push_back(v);
  }
  out.ext = make_extension(p, total);
  for (std::size_t k = 0; k < out.ext.fiber_size(); ++k)
    for (const auto& [m, c] : total.d(nv + k).terms())
      if (!m.contains_any_below(static_cast<std::uint32_t>(nv)))
        throw std::logic_error("acyclic closure: quotient differential on the fiber is nonzero");
  auto T = make_sullivan(total, budget);
  for (int k = 1; k <= max_degree; ++k)
    if (cohomology_at(*T, k, opts).dim() != 0)
      throw std::logic_error("acyclic closure: total algebra has cohomology in degree " + std::to_string(k));
  out.verified_degree = max_degree;
  return out;
}

}  // namespace rht
