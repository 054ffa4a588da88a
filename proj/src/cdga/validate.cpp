#include "rht/validate.hpp"

#include <algorithm>

namespace rht {

namespace {

void add(ValidationReport& r, std::string kind, std::string where, std::string msg) {
  r.violations.push_back({std::move(kind), std::move(where), std::move(msg)});
}

std::string basis_name(const GradedAlgebra& a, int n, std::size_t i) {
  return a.label(n, i) + " (degree " + std::to_string(n) + ")";
}

int top_of(const GradedAlgebra& a, int max_degree) {
  if (auto m = a.max_degree()) return std::min(*m, max_degree);
  return max_degree;
}

}  // namespace

ValidationReport validate(const SullivanPresentation& p) {
  ValidationReport r;
  const auto& ctx = *p.context();
  for (std::size_t g = 0; g < p.size(); ++g) {
    const auto& dg = p.d(g);
    const std::string& name = ctx[g].name;
    if (dg.is_zero()) continue;
    if (dg.coefficient(Monomial()) != 0)
      add(r, "constant_term", "d " + name, "d(" + name + ") has a constant term");
    for (const auto& [m, c] : dg.terms()) {
      int deg = m.degree(ctx);
      if (deg != ctx.degree(g) + 1) {
        add(r, "degree", "d " + name,
            "d(" + name + ") contains " + format_monomial(ctx, m) + " of degree " + std::to_string(deg) +
                ", expected " + std::to_string(ctx.degree(g) + 1));
        break;
      }
    }
  }
  if (!r.ok()) return r;
  auto d = p.derivation();
  for (std::size_t g = 0; g < p.size(); ++g) {
    AlgElement dd = d.apply(p.d(g));
    if (!dd.is_zero()) add(r, "d_squared", "d " + ctx[g].name, "d(d(" + ctx[g].name + ")) = " + dd.to_string());
  }
  return r;
}

ValidationReport validate_window(const GradedAlgebra& a, int lo, int hi, bool check_associativity) {
  ValidationReport r;
  hi = top_of(a, hi);
  lo = std::max(lo, a.min_degree());
  for (int n = lo; n <= hi; ++n)
    for (std::size_t i = 0; i < a.dim(n); ++i) {
      SparseVec dd = apply_d(a, n + 1, a.differential(n, i));
      if (!dd.empty()) add(r, "d_squared", basis_name(a, n, i), "d² is nonzero");
    }
  if (auto u = a.unit_index()) {
    for (int n = lo; n <= hi; ++n)
      for (std::size_t i = 0; i < a.dim(n); ++i) {
        auto e = sv::unit(static_cast<std::uint32_t>(i));
        if (a.product(0, *u, n, i) != e || a.product(n, i, 0, *u) != e)
          add(r, "unit", basis_name(a, n, i), "unit does not act as identity");
      }
    if (!a.differential(0, *u).empty()) add(r, "unit", "unit", "d(1) is nonzero");
  }
  for (int p = lo; p <= hi; ++p)
    for (int q = lo; p + q <= hi; ++q) {
      if (p + q < lo) continue;
      for (std::size_t i = 0; i < a.dim(p); ++i)
        for (std::size_t j = 0; j < a.dim(q); ++j) {
          SparseVec xy = a.product(p, i, q, j);
          SparseVec yx = a.product(q, j, p, i);
          bool odd = (static_cast<long>(p) * q) % 2 != 0;
          if (xy != (odd ? sv::scale(yx, -1) : yx))
            add(r, "commutativity", a.label(p, i) + " * " + a.label(q, j), "graded commutativity fails");
          if (p + q + 1 > hi + 1) continue;
          SparseVec lhs = apply_d(a, p + q, xy);
          SparseVec rhs = multiply(a, p + 1, a.differential(p, i), q, sv::unit(static_cast<std::uint32_t>(j)));
          SparseVec tail = multiply(a, p, sv::unit(static_cast<std::uint32_t>(i)), q + 1, a.differential(q, j));
          rhs = sv::axpy(rhs, p % 2 ? Rational(-1) : Rational(1), tail);
          if (lhs != rhs) add(r, "leibniz", a.label(p, i) + " * " + a.label(q, j), "Leibniz rule fails");
        }
    }
  if (check_associativity) {
    for (int p = lo; p <= hi; ++p)
      for (int q = lo; p + q <= hi; ++q)
        for (int s = lo; p + q + s <= hi; ++s)
          for (std::size_t i = 0; i < a.dim(p); ++i)
            for (std::size_t j = 0; j < a.dim(q); ++j)
              for (std::size_t k = 0; k < a.dim(s); ++k) {
                auto ei = sv::unit(static_cast<std::uint32_t>(i));
                auto ek = sv::unit(static_cast<std::uint32_t>(k));
                SparseVec left = multiply(a, p + q, a.product(p, i, q, j), s, ek);
                SparseVec right = multiply(a, p, ei, q + s, a.product(q, j, s, k));
                if (left != right)
                  add(r, "associativity", a.label(p, i) + " * " + a.label(q, j) + " * " + a.label(s, k),
                      "associativity fails");
              }
  }
  return r;
}

ValidationReport validate(const FiniteCDGA& a) { return validate_window(a, a.min_degree(), a.top_degree(), true); }

ValidationReport validate(const RelativeAlgebra& a) {
  ValidationReport r;
  const auto& ctx = *a.fiber_context();
  for (std::size_t g = 0; g < ctx.size(); ++g) {
    const auto& dg = a.fiber_differentials()[g];
    bool degree_ok = true;
    for (const auto& [t, c] : dg)
      if (t.base_degree + t.mono.degree(ctx) != ctx.degree(g) + 1) degree_ok = false;
    if (!degree_ok) {
      add(r, "degree", "d " + ctx[g].name, "differential has wrong degree");
      continue;
    }
    if (!a.d(dg).empty()) add(r, "d_squared", "d " + ctx[g].name, "d² is nonzero on generator");
  }
  return r;
}

ValidationReport validate(const QuotientAlgebra& q, int max_degree) {
  ValidationReport r;
  const GradedAlgebra& amb = q.ambient();
  if (auto s = dynamic_cast<const SullivanAlgebra*>(&amb))
    r.merge(validate(s->presentation()));
  else if (auto rel = dynamic_cast<const RelativeAlgebra*>(&amb))
    r.merge(validate(*rel));
  else if (auto f = dynamic_cast<const FiniteCDGA*>(&amb))
    r.merge(validate(*f));
  for (std::size_t k = 0; k < q.ideal_generators().size(); ++k) {
    const auto& g = q.ideal_generators()[k];
    if (g.degree + 1 > top_of(amb, max_degree + 1)) continue;
    SparseVec dg = apply_d(amb, g.degree, g.coeffs);
    if (!q.ideal_contains(g.degree + 1, dg))
      add(r, "ideal_stability", "ideal generator " + format_vector(amb, g.degree, g.coeffs),
          "d(generator) = " + format_vector(amb, g.degree + 1, dg) + " lies outside the ideal");
  }
  for (int n = q.min_degree(); n <= top_of(q, max_degree); ++n)
    for (std::size_t i = 0; i < q.dim(n); ++i)
      if (!apply_d(q, n + 1, q.differential(n, i)).empty())
        add(r, "d_squared", basis_name(q, n, i), "d² is nonzero in the quotient");
  return r;
}

ValidationReport validate(const Morphism& f, int max_degree) {
  ValidationReport r;
  const GradedAlgebra& src = f.source();
  const GradedAlgebra& tgt = f.target();
  if (f.on_generators_form()) {
    const auto& s = *f.sullivan_source();
    const auto& ctx = *s.context();
    for (std::size_t g = 0; g < ctx.size(); ++g) {
      int deg = ctx.degree(g);
      for (const auto& e : f.generator_images()[g])
        if (e.first >= tgt.dim(deg)) {
          add(r, "degree", ctx[g].name, "image outside target degree " + std::to_string(deg));
          break;
        }
      SparseVec lhs = f.apply(deg + 1, s.to_vector(deg + 1, s.presentation().d(g)));
      SparseVec rhs = apply_d(tgt, deg, f.generator_images()[g]);
      if (lhs != rhs)
        add(r, "chain_map", ctx[g].name, "f(d " + ctx[g].name + ") differs from d f(" + ctx[g].name + ")");
    }
    return r;
  }
  int top = top_of(src, max_degree);
  for (int n = src.min_degree(); n <= top; ++n)
    for (std::size_t i = 0; i < src.dim(n); ++i) {
      SparseVec lhs = f.apply(n + 1, src.differential(n, i));
      SparseVec rhs = apply_d(tgt, n, f.apply_basis(n, i));
      if (lhs != rhs) add(r, "chain_map", basis_name(src, n, i), "not a chain map");
    }
  for (int p = src.min_degree(); p <= top; ++p)
    for (int q = src.min_degree(); p + q <= top; ++q)
      for (std::size_t i = 0; i < src.dim(p); ++i)
        for (std::size_t j = 0; j < src.dim(q); ++j) {
          SparseVec lhs = f.apply(p + q, src.product(p, i, q, j));
          SparseVec rhs = multiply(tgt, p, f.apply_basis(p, i), q, f.apply_basis(q, j));
          if (lhs != rhs)
            add(r, "multiplicativity", src.label(p, i) + " * " + src.label(q, j), "not multiplicative");
        }
  return r;
}

ValidationReport validate_any(const GradedAlgebra& a, int max_degree) {
  if (auto s = dynamic_cast<const SullivanAlgebra*>(&a)) return validate(s->presentation());
  if (auto f = dynamic_cast<const FiniteCDGA*>(&a)) return validate(*f);
  if (auto q = dynamic_cast<const QuotientAlgebra*>(&a)) return validate(*q, max_degree);
  if (auto rel = dynamic_cast<const RelativeAlgebra*>(&a)) return validate(*rel);
  return validate_window(a, a.min_degree(), max_degree, false);
}

}  // namespace rht
