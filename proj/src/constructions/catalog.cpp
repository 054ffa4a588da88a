#include "rht/constructions.hpp"

#include <cctype>

namespace rht {

SullivanPresentation sphere_model(int n) {
  if (n < 1) throw std::invalid_argument("sphere dimension must be positive");
  if (n % 2) {
    auto c = make_context({{"u", n}});
    return SullivanPresentation(c, {AlgElement(c)});
  }
  auto c = make_context({{"a", n}, {"b", 2 * n - 1}});
  auto a = AlgElement::generator(c, 0);
  return SullivanPresentation(c, {AlgElement(c), a * a});
}

SullivanPresentation cp_model(int n) {
  if (n < 1) throw std::invalid_argument("projective dimension must be positive");
  auto c = make_context({{"x", 2}, {"y", 2 * n + 1}});
  auto x = AlgElement::generator(c, 0);
  return SullivanPresentation(c, {AlgElement(c), power(x, static_cast<unsigned>(n + 1))});
}

SullivanPresentation kz_model(int n) {
  if (n < 1) throw std::invalid_argument("K(Z,n) needs n >= 1");
  auto c = make_context({{"z", n}});
  return SullivanPresentation(c, {AlgElement(c)});
}

SullivanPresentation torus_model(int n) {
  if (n < 0) throw std::invalid_argument("torus rank must be nonnegative");
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({"t" + std::to_string(i), 1});
  auto c = make_context(gens);
  return SullivanPresentation(c, std::vector<AlgElement>(gens.size(), AlgElement(c)));
}

FinitePtr truncated_polynomial(int degree, int height) {
  if (degree < 1 || height < 0) throw std::invalid_argument("truncated polynomial needs degree >= 1, height >= 0");
  if (degree % 2 && height > 1) throw std::invalid_argument("odd generator squares to zero");
  FiniteCDGA::Builder b;
  std::vector<FiniteCDGA::Ref> pw;
  for (int k = 0; k <= height; ++k) pw.push_back(b.add(k * degree, k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k)));
  b.set_unit(pw[0]);
  for (int i = 1; i <= height; ++i)
    for (int j = 1; i + j <= height; ++j) b.set_product(pw[i], pw[j], sv::unit(0));
  return std::make_shared<const FiniteCDGA>(b.build());
}

FinitePtr wedge_cohomology(const FiniteCDGA& a, const FiniteCDGA& b) {
  for (const auto* x : {&a, &b})
    if (x->dim(0) != 1 || !x->unit_index() || x->min_degree() < 0)
      throw std::invalid_argument("wedge needs connected algebras with a unit in degree 0");
  FiniteCDGA::Builder out;
  auto unit = out.add(0, "1");
  out.set_unit(unit);
  std::map<std::pair<int, std::size_t>, FiniteCDGA::Ref> ra, rb;
  int top = std::max(a.top_degree(), b.top_degree());
  for (int n = 1; n <= top; ++n) {
    for (std::size_t i = 0; i < a.dim(n); ++i) ra[{n, i}] = out.add(n, a.label(n, i));
    for (std::size_t i = 0; i < b.dim(n); ++i) {
      std::string l = b.label(n, i);
      if (out.build().find(l)) l += "'";
      rb[{n, i}] = out.add(n, l);
    }
  }
  auto embed = [](const std::map<std::pair<int, std::size_t>, FiniteCDGA::Ref>& refs, int n, const SparseVec& v) {
    SparseVec r;
    for (const auto& [i, c] : v) r.emplace_back(static_cast<std::uint32_t>(refs.at({n, i}).index), c);
    return sv::collect(r);
  };
  for (const auto* src : {&a, &b}) {
    const auto& refs = src == &a ? ra : rb;
    for (const auto& [key, ref] : refs) {
      auto [p, i] = key;
      if (p + 1 <= src->top_degree()) out.set_differential(ref, embed(refs, p + 1, src->differential(p, i)));
      for (const auto& [key2, ref2] : refs) {
        auto [q, j] = key2;
        if (p + q > src->top_degree()) continue;
        auto prod = src->product(p, i, q, j);
        if (!prod.empty()) out.set_product(ref, ref2, embed(refs, p + q, prod));
      }
    }
  }
  return std::make_shared<const FiniteCDGA>(out.build());
}

FinitePtr finite_tensor(const FinitePtr& a, const FinitePtr& b) {
  auto t = std::make_shared<TensorAlgebra>(a, b);
  return std::make_shared<const FiniteCDGA>(
      FiniteCDGA::from_view(*t, a->min_degree() + b->min_degree(), a->top_degree() + b->top_degree()));
}

FinitePtr catalog_cohomology(const CatalogModel& m) {
  if (auto f = std::get_if<FinitePtr>(&m)) {
    auto top = (*f)->top_degree();
    return cohomology_algebra(**f, (*f)->min_degree(), top);
  }
  const auto& p = std::get<SullivanPresentation>(m);
  auto top = certified_top(p);
  if (!top) throw std::invalid_argument("cohomology is not certified finite-dimensional");
  return cohomology_algebra(*make_sullivan(p), 0, *top);
}

namespace {

struct CatalogParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw UnknownCatalogEntry("catalog expression: " + what + " at offset " + std::to_string(pos));
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) fail("expected a name");
    return std::string(s.substr(start, pos - start));
  }
  // Arguments are kept as raw text; nested entries are parsed on demand.
  std::vector<std::string> args() {
    skip();
    std::vector<std::string> out;
    if (pos >= s.size() || s[pos] != '(') return out;
    ++pos;
    int depth = 0;
    std::size_t start = pos;
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (c == '(') ++depth;
      if (c == ')' && depth-- == 0) break;
      if (c == ',' && depth == 0) {
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
      }
    }
    if (pos >= s.size()) fail("unbalanced parentheses");
    std::string last(s.substr(start, pos - start));
    if (!out.empty() || last.find_first_not_of(" \t") != std::string::npos) out.push_back(last);
    ++pos;
    return out;
  }
};

int int_param(const std::string& name, const std::vector<std::string>& params, std::size_t i) {
  if (i >= params.size()) throw UnknownCatalogEntry(name + ": missing parameter " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    std::string t = params[i];
    t.erase(0, t.find_first_not_of(" \t"));
    int v = std::stoi(t, &used);
    if (t.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(t);
    return v;
  } catch (const std::logic_error&) {
    throw UnknownCatalogEntry(name + ": parameter '" + params[i] + "' is not an integer");
  }
}

}  // namespace

CatalogModel catalog(std::string_view expr) {
  CatalogParser p{expr};
  std::string name = p.ident();
  auto params = p.args();
  p.skip();
  if (p.pos != expr.size()) p.fail("trailing text");
  return catalog(name, params);
}

CatalogModel catalog(std::string_view name_view, const std::vector<std::string>& params) {
  std::string name(name_view);
  auto arity = [&](std::size_t n) {
    if (params.size() != n)
      throw UnknownCatalogEntry(name + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
  };
  if (name == "sphere") return arity(1), sphere_model(int_param(name, params, 0));
  if (name == "cp") return arity(1), cp_model(int_param(name, params, 0));
  if (name == "k_z" || name == "kz") return arity(1), kz_model(int_param(name, params, 0));
  if (name == "torus") return arity(1), torus_model(int_param(name, params, 0));
  if (name == "truncated_poly") {
    arity(2);
    return truncated_polynomial(int_param(name, params, 0), int_param(name, params, 1));
  }
  if (name == "product") {
    arity(2);
    auto a = catalog(params[0]), b = catalog(params[1]);
    auto* pa = std::get_if<SullivanPresentation>(&a);
    auto* pb = std::get_if<SullivanPresentation>(&b);
    if (pa && pb) return tensor(*pa, *pb);
    return finite_tensor(catalog_cohomology(a), catalog_cohomology(b));
  }
  if (name == "wedge_cohomology" || name == "wedge") {
    arity(2);
    return wedge_cohomology(*catalog_cohomology(catalog(params[0])), *catalog_cohomology(catalog(params[1])));
  }
  throw UnknownCatalogEntry("unknown catalog entry '" + name + "'");
}

}  // namespace rht
