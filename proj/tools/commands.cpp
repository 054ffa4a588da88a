#include "commands.hpp"

#include <fstream>
#include <sstream>

namespace rht::cli {

namespace {

CdgaDocument load(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read '" + file + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

Json betti_json(const std::vector<std::size_t>& b, int lo = 0) {
  Json j = Json::object();
  for (std::size_t i = 0; i < b.size(); ++i) j[std::to_string(lo + static_cast<int>(i))] = b[i];
  return j;
}

Json ranks_json(const std::map<int, std::size_t>& r) {
  Json j = Json::object();
  for (const auto& [k, n] : r) j[std::to_string(k)] = n;
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

// The minimal Sullivan model of a declaration: the presentation itself when it
// is already minimal, else the degree-by-degree construction up to max.
SullivanPresentation model_of(const CdgaDecl& c, int max) {
  if (c.free() && is_minimal(c.presentation) && is_sullivan(c.presentation).ok) return c.presentation;
  MinimalModelOptions opts;
  opts.max_degree = max;
  return minimal_model(c.algebra(), opts).model;
}

Cochain cochain_in(const CdgaDecl& c, const GradedAlgebra& A, const AlgElement& x) {
  if (x.is_zero()) throw SemanticError({}, "zero class given");
  if (!x.is_homogeneous()) throw SemanticError({}, "'" + x.to_string() + "' is not homogeneous");
  int n = *x.degree();
  if (c.free()) return static_cast<const SullivanAlgebra&>(A).to_cochain(x);
  const auto& q = static_cast<const QuotientAlgebra&>(A);
  const auto& S = static_cast<const SullivanAlgebra&>(q.ambient());
  return {n, q.project(n, S.to_vector(n, x))};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string decl_text(const std::string& name, const SullivanPresentation& p) { return serialize(make_decl(name, p)); }

}  // namespace

Outcome validate_cmd(const std::string& file, int max) {
  auto doc = load(file);
  Outcome out{envelope("validate", max)};
  Json items = Json::array();
  auto record = [&](const std::string& kind, const std::string& name, const ValidationReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(x.kind + " at " + x.where + ": " + x.message);
    items.push_back({{"kind", kind}, {"name", name}, {"ok", r.ok()}, {"violations", v}});
    out.ok = out.ok && r.ok();
  };
  for (const auto& c : doc.cdgas) {
    ValidationReport r;
    if (c.free()) {
      r = validate(c.presentation);
      auto cert = is_sullivan(c.presentation);
      if (!cert.ok) r.violations.push_back({"sullivan", c.name, "generators admit no Sullivan filtration"});
    } else {
      auto A = c.algebra();
      r = validate(static_cast<const QuotientAlgebra&>(*A), max);
    }
    record("cdga", c.name, r);
  }
  for (const auto& m : doc.morphisms) record("morphism", m.name, validate(make_morphism(doc, m), max));
  for (const auto& a : doc.arrangements) record("arrangement", a.name, validate(*arrangement_complex(a.arrangement)));
  for (const auto& p : doc.pds) {
    auto pd = make_pd(doc, p);
    ValidationReport r = validate(*pd.algebra);
    if (!satisfies_poincare_duality(*pd.algebra))
      r.violations.push_back({"poincare_duality", p.cdga, "top pairing is degenerate"});
    record("pd", p.cdga, r);
  }
  out.result["items"] = items;
  out.result["ok"] = out.ok;
  return out;
}

Outcome cohomology_cmd(const Source& s) {
  auto doc = load(s.file);
  auto A = doc.cdga(s.name).algebra();
  auto r = cohomology(*A, 0, s.max);
  Outcome out{to_json(r)};
  out.result["name"] = s.name;
  out.result["betti"] = r.betti();
  out.result["euler_characteristic"] = euler_characteristic(*A, s.max).value;
  return out;
}

Outcome minimal_model_cmd(const Source& s) {
  auto doc = load(s.file);
  MinimalModelOptions opts;
  opts.max_degree = s.max;
  auto r = minimal_model(doc.cdga(s.name).algebra(), opts);
  Outcome out{to_json(r, s.name + "_min")};
  auto q = is_quasi_iso(r.phi, s.max);
  out.result["quasi_iso_through"] = s.max;
  out.result["quasi_iso"] = q.ok;
  out.ok = q.ok;
  out.preamble = decl_text(s.name + "_min", r.model);
  return out;
}

Outcome homotopy_cmd(const HomotopyArgs& a) {
  auto doc = load(a.src.file);
  auto model = model_of(doc.cdga(a.src.name), a.src.max);
  Outcome out{envelope("homotopy", a.src.max)};
  out.result["name"] = a.src.name;
  out.result["ranks"] = ranks_json(homotopy_ranks(model, a.src.max));
  if (a.brackets) {
    LieTable t(model, a.src.max - 1);
    out.result["lie"] = to_json(t);
    auto bad = check_lie_axioms(t);
    out.result["lie_axioms_ok"] = bad.empty();
    out.ok = bad.empty();
  }
  if (a.filtrations > 0) out.result["filtrations"] = to_json(lcs_filtrations(model, a.filtrations, a.depth));
  if (a.hurewicz > 0) out.result["hurewicz"] = to_json(hurewicz_matrix(model, a.hurewicz));
  return out;
}

Outcome bch_cmd(const BchArgs& a) {
  auto doc = load(a.src.file);
  auto model = model_of(doc.cdga(a.src.name), a.src.max);
  LieTable t(model, 0);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < t.dim(0); ++i) gens.push_back({t.label(0, i), 1});
  if (gens.empty()) throw SemanticError({}, "L_0 is zero for '" + a.src.name + "'");
  auto ctx = make_context(gens);
  auto coords = [&](const std::string& text) {
    AlgElement x = parse_expression(text, ctx);
    SparseVec v;
    for (auto it = x.terms().begin(); it != x.terms().end(); ++it) {
      const auto& f = it->first.factors();
      if (f.size() != 1 || f[0].exp != 1) throw SemanticError({}, "'" + text + "' is not linear in the L_0 basis");
      v.push_back({f[0].gen, it->second});
    }
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return v;
  };
  SparseVec x = coords(a.a), y = coords(a.b);
  SparseVec z = bch_product(t, a.nil_class, x, y);
  Outcome out{envelope("bch", 0)};
  out.result["class"] = a.nil_class;
  out.result["a"] = t.format(0, x);
  out.result["b"] = t.format(0, y);
  out.result["product"] = t.format(0, z);
  out.result["nilpotency_class"] = nilpotency_class(t);
  return out;
}

Outcome invariants_cmd(const InvariantsArgs& a) {
  auto doc = load(a.src.file);
  const auto& c = doc.cdga(a.src.name);
  auto model = model_of(c, a.src.max);
  Outcome out{envelope("invariants", a.src.max)};
  out.result["name"] = a.src.name;

  auto e = toomer_invariant(model, a.word_bound, a.src.max);
  out.result["toomer"] = {{"e", optional_json(e.e)}, {"word_bound", e.word_bound}, {"window", e.window},
                          {"exact", e.exact}};
  auto cat = cat_bounds(model, a.src.max);
  out.result["cat"] = {{"lower", optional_json(cat.lower)},
                       {"upper", optional_json(cat.upper)},
                       {"poincare_duality", cat.poincare_duality},
                       {"exact", optional_json(cat.exact)}};

  auto A = c.algebra();
  auto top = certified_top(*A);
  if (top && *top <= a.src.max) {
    auto H = cohomology_algebra(*A, 0, *top);
    out.result["tc_cup_length"] = tc_cup_length(*H);
  } else {
    out.result["tc_cup_length"] = nullptr;
  }

  Json loop = Json::object();
  try {
    auto dims = loop_homology_dims(lie_dims_from_model(model, a.src.max + 1), a.src.max);
    for (std::size_t k = 0; k < dims.size(); ++k) loop[std::to_string(k)] = dims[k].get_str();
  } catch (const UnsupportedInput&) {
    loop = nullptr;  // π_1 acts: degree 0 of UL is infinite-dimensional
  }
  out.result["loop_betti"] = loop;

  auto tri = trichotomy_report(homotopy_ranks(model, a.src.max), certified_top(model).has_value(), a.src.max);
  std::ostringstream alpha;
  alpha.precision(6);
  alpha << std::fixed << tri.alpha_estimate;
  out.result["trichotomy"] = {{"evidence", to_string(tri.evidence)},
                              {"chi_pi", tri.chi_pi},
                              {"alpha_estimate", alpha.str()},
                              {"cohomology_finite", tri.cohomology_finite},
                              {"window", tri.window}};

  if (!a.massey.empty()) {
    auto parts = split_list(a.massey);
    if (parts.size() != 3) throw UsageError("--massey needs three comma-separated classes");
    std::vector<Cochain> x;
    for (const auto& p : parts) x.push_back(cochain_in(c, *A, parse_expression(p, c.presentation.context())));
    auto m = massey_triple(*A, x[0], x[1], x[2]);
    Json mj = {{"defined", m.defined}};
    if (m.defined) {
      mj["representative"] = format_vector(*A, m.representative.degree, m.representative.coeffs);
      mj["indeterminacy_dim"] = m.indeterminacy.size();
      mj["nontrivial"] = m.nontrivial;
    } else {
      mj["reason"] = m.reason;
    }
    out.result["massey"] = mj;
  }
  return out;
}

Outcome elliptic_cmd(const std::vector<int>& evens, const std::vector<int>& odds) {
  for (int x : evens)
    if (x < 1) throw UsageError("--evens entries must be positive (generator degree 2a)");
  for (int x : odds)
    if (x < 1) throw UsageError("--odds entries must be positive (generator degree 2b-1)");
  auto r = elliptic_degrees_check({evens, odds});
  Outcome out{envelope("elliptic_check")};
  out.result["evens"] = evens;
  out.result["odds"] = odds;
  out.result["ok"] = r.ok;
  Json w = Json::array();
  for (auto i : r.witness) w.push_back(evens[i]);
  out.result["witness"] = w;
  return out;
}

Outcome loopspace_cmd(const Source& s) {
  auto doc = load(s.file);
  auto model = model_of(doc.cdga(s.name), s.max + 1);
  auto L = free_loop_model(model);
  auto r = cohomology(*make_sullivan(L), 0, s.max);
  Outcome out{envelope("free_loop", s.max)};
  out.result["name"] = s.name;
  out.result["model"] = to_json(L, "L" + s.name);
  out.result["betti"] = betti_json(r.betti());
  out.preamble = decl_text("L" + s.name, L);
  return out;
}

namespace {

LambdaExtension extension_of(const CdgaDocument& doc, const FibrationArgs& a) {
  const auto& B = doc.cdga(a.base);
  const auto& E = doc.cdga(a.total);
  if (!B.free() || !E.free()) throw SemanticError({}, "fibrations need free (Sullivan) base and total algebras");
  return make_extension(B.presentation, E.presentation);
}

}  // namespace

Outcome pullback_cmd(const FibrationArgs& a) {
  auto doc = load(a.file);
  auto ext = extension_of(doc, a);
  const auto& m = doc.morphism(a.map);
  if (m.source != a.base) throw SemanticError(m.span, "morphism '" + m.name + "' does not start at '" + a.base + "'");
  auto phi = make_morphism(doc, m);
  auto pulled = pushout_extension(phi, ext);
  auto r = cohomology(*make_sullivan(pulled.total), 0, a.max);
  Outcome out{envelope("pullback", a.max)};
  out.result["total"] = to_json(pulled.total, a.total + "_pullback");
  out.result["betti"] = betti_json(r.betti());
  out.preamble = decl_text(a.total + "_pullback", pulled.total);
  return out;
}

Outcome fiber_cmd(const FibrationArgs& a) {
  auto doc = load(a.file);
  auto ext = extension_of(doc, a);
  auto F = fiber_model(ext);
  auto r = cohomology(*make_sullivan(F), 0, a.max);
  Outcome out{envelope("fiber", a.max)};
  out.result["fiber"] = to_json(F, a.total + "_fiber");
  out.result["betti"] = betti_json(r.betti());
  out.preamble = decl_text(a.total + "_fiber", F);
  return out;
}

Outcome holonomy_cmd(const FibrationArgs& a) {
  auto doc = load(a.file);
  auto ext = extension_of(doc, a);
  auto h = holonomy_representation(ext, a.max);
  Outcome out{to_json(h, *ext.base.context())};
  out.ok = h.nilpotent;
  return out;
}

Outcome config_space_cmd(const ConfigArgs& a) {
  auto doc = load(a.file);
  auto pd = make_pd(doc, doc.pd(a.pd));
  auto m = config_space_model(pd, a.k, a.max_k);
  auto r = cohomology(*m.quotient, 0, m.top_degree);
  auto v = validate(*m.quotient, m.top_degree);
  Outcome out{envelope("config_space", m.top_degree)};
  out.result["pd"] = a.pd;
  out.result["k"] = a.k;
  out.result["dimension"] = m.dimension;
  out.result["betti"] = betti_json(r.betti());
  out.result["euler_characteristic"] = euler_characteristic(*m.quotient, m.top_degree).value;
  out.result["valid"] = v.ok();
  out.ok = v.ok();
  return out;
}

Outcome arrangement_cmd(const std::string& file, const std::string& name) {
  auto doc = load(file);
  const auto& arr = doc.arrangement(name).arrangement;
  auto lattice = intersection_lattice(arr);
  auto D = arrangement_complex(arr);
  auto r = cohomology(*D, D->min_degree(), D->top_degree());
  auto v = validate(*D);
  Outcome out{envelope("arrangement", D->top_degree())};
  out.result["name"] = name;
  out.result["flats"] = to_json(lattice);
  out.result["betti"] = betti_json(r.betti(), D->min_degree());
  out.result["valid"] = v.ok();
  out.ok = v.ok();
  return out;
}

Outcome catalog_cmd(const std::string& name, const std::vector<std::string>& params) {
  auto m = params.empty() ? catalog(name) : catalog(name, params);
  std::string label;
  for (char ch : name)
    if (std::isalnum(static_cast<unsigned char>(ch))) label += ch;
  for (const auto& p : params) label += "_" + p;
  if (label.empty() || std::isdigit(static_cast<unsigned char>(label[0]))) label = "M" + label;
  Outcome out{envelope("catalog")};
  if (const auto* p = std::get_if<SullivanPresentation>(&m)) {
    out.result["model"] = to_json(*p, label);
    out.preamble = decl_text(label, *p);
  } else {
    out.result["algebra"] = to_json(*std::get<FinitePtr>(m));
  }
  return out;
}

Outcome mapping_space_cmd(const MappingArgs& a) {
  auto doc = load(a.file);
  const auto& m = doc.morphism(a.map);
  const auto& V = doc.cdga(m.source);
  const auto& W = doc.cdga(m.target);
  if (!W.free()) throw SemanticError(m.span, "mapping spaces need a free target algebra");
  Outcome out{envelope("mapping_space", a.max)};
  Json dims = Json::object();
  for (int n = 1; n <= a.max; ++n) {
    auto r = mapping_space_pi(V.presentation, W.presentation, m.images, n);
    dims[std::to_string(n)] = r.dimension;
  }
  out.result["map"] = a.map;
  out.result["pi_dims"] = dims;
  return out;
}

}  // namespace rht::cli
