#include "rht/serialize.hpp"

#include <sstream>

namespace rht {

Json envelope(std::string_view kind) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = std::string(kind);
  return j;
}

Json envelope(std::string_view kind, int certified_degree) {
  Json j = envelope(kind);
  j["certified_degree"] = certified_degree;
  return j;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const AlgElement& x) {
  Json terms = Json::array();
  if (x.context())
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
      Json mono = Json::object();
      for (const auto& f : it->first.factors()) mono[(*x.context())[f.gen].name] = f.exp;
      terms.push_back({{"coefficient", to_json(it->second)}, {"monomial", mono}});
    }
  return {{"text", x.to_string()}, {"terms", terms}};
}

Json to_json(const SullivanPresentation& p, std::string_view name) {
  Json gens = Json::array();
  Json d = Json::object();
  const auto& ctx = *p.context();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    gens.push_back({{"name", ctx[i].name}, {"degree", ctx[i].degree}});
    if (!p.d(i).is_zero()) d[ctx[i].name] = to_json(p.d(i));
  }
  return {{"name", std::string(name)}, {"generators", gens}, {"differential", d}};
}

Json to_json(const FiniteCDGA& a) {
  Json basis = Json::array(), diff = Json::array(), prod = Json::array();
  for (int n = a.min_degree(); n <= a.top_degree(); ++n)
    for (std::size_t i = 0; i < a.dim(n); ++i) {
      basis.push_back({{"degree", n}, {"index", i}, {"label", a.label(n, i)}});
      if (n + 1 <= a.top_degree()) {
        auto dv = a.differential(n, i);
        if (!dv.empty()) diff.push_back({{"from", a.label(n, i)}, {"value", format_vector(a, n + 1, dv)}});
      }
    }
  for (int p = a.min_degree(); p <= a.top_degree(); ++p)
    for (int q = a.min_degree(); p + q <= a.top_degree(); ++q) {
      if (p + q < a.min_degree()) continue;
      for (std::size_t i = 0; i < a.dim(p); ++i)
        for (std::size_t j = 0; j < a.dim(q); ++j) {
          auto v = a.product(p, i, q, j);
          if (v.empty()) continue;
          prod.push_back({{"left", a.label(p, i)}, {"right", a.label(q, j)}, {"value", format_vector(a, p + q, v)}});
        }
    }
  Json j = {{"basis", basis}, {"differential", diff}, {"products", prod}};
  if (auto u = a.unit()) j["unit"] = a.label(u->degree, u->index);
  return j;
}

Json to_json(const CohomologyReport& r) {
  Json j = envelope("cohomology", r.certified_degree());
  Json dims = Json::object();
  Json reps = Json::object();
  for (int n = r.lo; n <= r.hi; ++n) dims[std::to_string(n)] = r.at(n).dim();
  j["dims"] = dims;
  j["vanishes_above"] = r.vanishes_above ? Json(*r.vanishes_above) : Json(nullptr);
  j["complete"] = r.complete();
  return j;
}

Json to_json(const MinimalModelResult& r, std::string_view name) {
  Json j = envelope("minimal_model", r.certified_degree);
  j["model"] = to_json(r.model, name);
  Json prov = Json::object(), phi = Json::object();
  const auto& ctx = *r.model.context();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    prov[ctx[i].name] = to_string(r.provenance.at(i));
    int deg = ctx[i].degree;
    phi[ctx[i].name] = format_vector(r.phi.target(), deg, r.phi.apply(deg, r.model_algebra->to_vector(deg, r.model.generator(i))));
  }
  j["provenance"] = prov;
  j["phi"] = phi;
  return j;
}

Json to_json(const LieTable& t) {
  Json j = envelope("homotopy_lie", t.max_degree());
  Json basis = Json::array(), brackets = Json::array();
  for (int k = 0; k <= t.max_degree(); ++k)
    for (std::size_t i = 0; i < t.dim(k); ++i) basis.push_back({{"name", t.label(k, i)}, {"degree", k}});
  for (int p = 0; p <= t.max_degree(); ++p)
    for (int q = p; p + q <= t.max_degree(); ++q)
      for (std::size_t i = 0; i < t.dim(p); ++i)
        for (std::size_t k = (p == q ? i : 0); k < t.dim(q); ++k) {
          auto v = t.bracket_basis(p, i, q, k);
          if (v.empty()) continue;
          brackets.push_back({{"left", t.label(p, i)}, {"right", t.label(q, k)}, {"value", t.format(p + q, v)}});
        }
  j["basis"] = basis;
  j["brackets"] = brackets;
  return j;
}

Json to_json(const FiltrationReport& f) {
  Json j = envelope("filtrations");
  j["k"] = f.k;
  j["v_dims"] = f.v_dims;
  j["lcs_dims"] = f.lcs_dims;
  j["nil_v"] = f.nil_v ? Json(*f.nil_v) : Json(nullptr);
  j["nil_l"] = f.nil_l ? Json(*f.nil_l) : Json(nullptr);
  j["agrees"] = f.agrees();
  return j;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.entry(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const HurewiczReport& h) {
  Json j = envelope("hurewicz");
  j["k"] = h.k;
  j["matrix"] = to_json(h.matrix);
  j["rank"] = h.rank;
  j["kernel_dim"] = h.kernel_dim;
  j["cokernel_dim"] = h.cokernel_dim;
  return j;
}

Json to_json(const HolonomyReport& h, const GeneratorContext& base) {
  Json j = envelope("holonomy", h.window);
  j["fiber"] = to_json(h.fiber, "fiber");
  Json dims = Json::object();
  for (const auto& [n, H] : h.fiber_cohomology) dims[std::to_string(n)] = H.dim();
  j["fiber_cohomology_dims"] = dims;
  Json blocks = Json::array();
  for (const auto& b : h.blocks)
    blocks.push_back({{"base_generator", base[b.base_generator].name}, {"degree", b.degree}, {"matrix", to_json(b.matrix)}});
  j["blocks"] = blocks;
  j["nilpotent"] = h.nilpotent;
  return j;
}

Json to_json(const IntersectionLattice& l) {
  Json flats = Json::array();
  for (const auto& f : l.flats) {
    Json subsets = Json::array();
    for (auto m : f.subsets) {
      Json s = Json::array();
      for (std::uint32_t i = 0; m >> i; ++i)
        if (m >> i & 1) s.push_back(i + 1);
      subsets.push_back(s);
    }
    flats.push_back({{"codim", f.codim}, {"subsets", subsets}});
  }
  return flats;
}

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      // Elements show their text form only.
      if (k == "terms" && j.contains("text")) continue;
      if (v.is_object() && v.size() == 2 && v.contains("text") && v.contains("terms")) {
        os << pad << k << ": " << scalar(v["text"]) << "\n";
      } else if (v.is_structured() && !v.empty() && !(v.is_array() && is_flat(v))) {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      } else if (v.is_array()) {
        os << pad << k << ": [";
        bool first = true;
        for (const auto& x : v) {
          os << (first ? "" : ", ") << scalar(x);
          first = false;
        }
        os << "]\n";
      } else if (v.is_object()) {
        os << pad << k << ": {}\n";
      } else {
        os << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_array() && is_flat(x)) {
        os << pad << "- [";
        bool first = true;
        for (const auto& y : x) {
          os << (first ? "" : ", ") << scalar(y);
          first = false;
        }
        os << "]\n";
      } else if (x.is_structured()) {
        os << pad << "-\n";
        render(os, x, indent + 2);
      } else {
        os << pad << "- " << scalar(x) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace rht
