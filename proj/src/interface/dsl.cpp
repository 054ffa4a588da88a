#include "rht/interface.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace rht {

namespace {

std::string where(SourceSpan s) {
  if (s.line == 0) return "";
  return std::to_string(s.line) + ":" + std::to_string(s.column) + ": ";
}

}  // namespace

ParseError::ParseError(SourceSpan at, const std::string& msg) : std::runtime_error(where(at) + msg), span(at) {}
SemanticError::SemanticError(SourceSpan at, const std::string& msg) : std::runtime_error(where(at) + msg), span(at) {}

namespace {

// ---- lexer ----------------------------------------------------------------

struct Token {
  enum Kind { Ident, Int, Sym, End } kind = End;
  std::string text;
  SourceSpan span;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    SourceSpan at{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({Token::Ident, std::string(s.substr(i, j - i)), at});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, std::string(s.substr(i, j - i)), at});
      advance(j - i);
      continue;
    }
    if (s.substr(i, 3) == "|->") {
      out.push_back({Token::Sym, "|->", at});
      advance(3);
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Token::Sym, "->", at});
      advance(2);
      continue;
    }
    if (std::string_view("{}()[];:,+-*^/=").find(c) != std::string_view::npos) {
      out.push_back({Token::Sym, std::string(1, c), at});
      advance(1);
      continue;
    }
    throw ParseError(at, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::End, "", {line, col}});
  return out;
}

// ---- syntax tree ----------------------------------------------------------

struct Expr {
  enum Kind { Num, Var, Add, Sub, Mul, Neg, Pow } kind = Num;
  Rational value;
  std::string name;
  unsigned exponent = 0;
  std::vector<Expr> kids;
  SourceSpan span;
};

struct RawGen {
  std::string name;
  int degree;
  SourceSpan span;
};
struct RawDiff {
  std::string gen;
  Expr rhs;
  SourceSpan span;
};
struct RawRel {
  Expr rhs;
  SourceSpan span;
};
struct RawCdga {
  std::string name;
  SourceSpan span;
  std::vector<RawGen> gens;
  std::vector<RawDiff> diffs;
  std::vector<RawRel> rels;
};
struct RawMorphism {
  std::string name, source, target;
  SourceSpan span, source_span, target_span;
  std::vector<RawDiff> maps;
};
struct RawPd {
  std::string cdga;
  int dim;
  Expr orientation;
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  Expr standalone_expr() {
    Expr e = expr();
    if (peek().kind != Token::End) throw ParseError(peek().span, "unexpected " + describe(peek()) + " after expression");
    return e;
  }

  void document(std::vector<RawCdga>& cdgas, std::vector<RawMorphism>& morphisms,
                std::vector<ArrangementDecl>& arrangements, std::vector<RawPd>& pds) {
    while (peek().kind != Token::End) {
      const Token& kw = peek();
      if (is_ident("cdga")) {
        cdgas.push_back(cdga());
      } else if (is_ident("morphism")) {
        morphisms.push_back(morphism());
      } else if (is_ident("arrangement")) {
        arrangements.push_back(arrangement());
      } else if (is_ident("pd")) {
        pds.push_back(pd());
      } else {
        throw ParseError(kw.span, "expected 'cdga', 'morphism', 'arrangement' or 'pd', found " + describe(kw));
      }
    }
  }

 private:
  const Token& peek(std::size_t k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
  const Token& next() { return t_[std::min(pos_++, t_.size() - 1)]; }
  bool is_sym(std::string_view s, std::size_t k = 0) const { return peek(k).kind == Token::Sym && peek(k).text == s; }
  bool is_ident(std::string_view s) const { return peek().kind == Token::Ident && peek().text == s; }
  static std::string describe(const Token& t) {
    if (t.kind == Token::End) return "end of input";
    return "'" + t.text + "'";
  }
  const Token& expect_sym(std::string_view s) {
    if (!is_sym(s)) throw ParseError(peek().span, "expected '" + std::string(s) + "', found " + describe(peek()));
    return next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Token::Ident) throw ParseError(peek().span, std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }
  void expect_keyword(std::string_view kw) {
    if (!is_ident(kw)) throw ParseError(peek().span, "expected '" + std::string(kw) + "', found " + describe(peek()));
    next();
  }
  int integer(const char* what) {
    bool neg = false;
    SourceSpan at = peek().span;
    if (is_sym("-")) {
      next();
      neg = true;
    }
    if (peek().kind != Token::Int) throw ParseError(peek().span, std::string("expected ") + what + ", found " + describe(peek()));
    const std::string& text = next().text;
    if (text.size() > 6) throw ParseError(at, std::string(what) + " is too large");
    int v = std::stoi(text);
    return neg ? -v : v;
  }
  Rational rational_literal() {
    bool neg = false;
    if (is_sym("-")) {
      next();
      neg = true;
    }
    if (peek().kind != Token::Int) throw ParseError(peek().span, "expected a rational number, found " + describe(peek()));
    Rational q(mpz_class(next().text));
    if (is_sym("/")) {
      next();
      if (peek().kind != Token::Int) throw ParseError(peek().span, "expected a denominator, found " + describe(peek()));
      SourceSpan at = peek().span;
      mpz_class den(next().text);
      if (den == 0) throw ParseError(at, "zero denominator");
      q /= den;
    }
    return neg ? Rational(-q) : q;
  }

  RawCdga cdga() {
    RawCdga c;
    c.span = next().span;
    c.name = expect_ident("a cdga name").text;
    expect_sym("{");
    while (!is_sym("}")) {
      if (peek().kind == Token::End) throw ParseError(peek().span, "unterminated cdga block '" + c.name + "'");
      SourceSpan at = peek().span;
      if (is_ident("gen")) {
        next();
        do {
          const Token& n = expect_ident("a generator name");
          expect_sym(":");
          int deg = integer("a degree");
          c.gens.push_back({n.text, deg, n.span});
        } while (is_sym(",") && (next(), true));
        expect_sym(";");
      } else if (is_ident("d") && peek(1).kind == Token::Ident && is_sym("=", 2)) {
        next();
        std::string g = next().text;
        next();
        Expr rhs = expr();
        expect_sym(";");
        c.diffs.push_back({g, std::move(rhs), at});
      } else if (is_ident("rel")) {
        next();
        Expr rhs = expr();
        expect_sym(";");
        c.rels.push_back({std::move(rhs), at});
      } else {
        throw ParseError(at, "expected 'gen', 'd' or 'rel', found " + describe(peek()));
      }
    }
    next();
    return c;
  }

  RawMorphism morphism() {
    RawMorphism m;
    m.span = next().span;
    m.name = expect_ident("a morphism name").text;
    expect_sym(":");
    m.source_span = peek().span;
    m.source = expect_ident("a source cdga").text;
    expect_sym("->");
    m.target_span = peek().span;
    m.target = expect_ident("a target cdga").text;
    expect_sym("{");
    while (!is_sym("}")) {
      if (peek().kind == Token::End) throw ParseError(peek().span, "unterminated morphism block '" + m.name + "'");
      SourceSpan at = peek().span;
      std::string g = expect_ident("a source generator").text;
      expect_sym("|->");
      Expr rhs = expr();
      expect_sym(";");
      m.maps.push_back({g, std::move(rhs), at});
    }
    next();
    return m;
  }

  ArrangementDecl arrangement() {
    ArrangementDecl a;
    a.span = next().span;
    a.name = expect_ident("an arrangement name").text;
    expect_keyword("ambient");
    SourceSpan amb_at = peek().span;
    a.arrangement.ambient = integer("an ambient dimension");
    if (a.arrangement.ambient < 0) throw SemanticError(amb_at, "ambient dimension must be nonnegative");
    expect_sym("{");
    while (!is_sym("}")) {
      if (peek().kind == Token::End) throw ParseError(peek().span, "unterminated arrangement block '" + a.name + "'");
      expect_keyword("subspace");
      std::vector<std::vector<Rational>> rows;
      expect_sym("[");
      do {
        SourceSpan row_at = peek().span;
        expect_sym("[");
        std::vector<Rational> r;
        if (!is_sym("]"))
          do r.push_back(rational_literal());
          while (is_sym(",") && (next(), true));
        expect_sym("]");
        if (r.size() != static_cast<std::size_t>(a.arrangement.ambient))
          throw SemanticError(row_at, "equation has " + std::to_string(r.size()) + " entries, ambient dimension is " +
                                          std::to_string(a.arrangement.ambient));
        rows.push_back(std::move(r));
      } while (is_sym(",") && (next(), true));
      expect_sym("]");
      expect_sym(";");
      a.arrangement.subspaces.push_back(std::move(rows));
    }
    next();
    return a;
  }

  RawPd pd() {
    RawPd p;
    p.span = next().span;
    p.cdga = expect_ident("a cdga name").text;
    expect_keyword("dim");
    p.dim = integer("a formal dimension");
    expect_keyword("orientation");
    p.orientation = expr();
    expect_sym(";");
    return p;
  }

  Expr expr() {
    Expr left = term();
    while (is_sym("+") || is_sym("-")) {
      SourceSpan at = peek().span;
      Expr::Kind k = next().text == "+" ? Expr::Add : Expr::Sub;
      Expr right = term();
      Expr e;
      e.kind = k;
      e.span = at;
      e.kids.push_back(std::move(left));
      e.kids.push_back(std::move(right));
      left = std::move(e);
    }
    return left;
  }
  Expr term() {
    Expr left = unary();
    while (is_sym("*")) {
      SourceSpan at = next().span;
      Expr right = unary();
      Expr e;
      e.kind = Expr::Mul;
      e.span = at;
      e.kids.push_back(std::move(left));
      e.kids.push_back(std::move(right));
      left = std::move(e);
    }
    return left;
  }
  Expr unary() {
    if (is_sym("-")) {
      SourceSpan at = next().span;
      Expr e;
      e.kind = Expr::Neg;
      e.span = at;
      e.kids.push_back(unary());
      return e;
    }
    return power();
  }
  Expr power() {
    Expr base = atom();
    if (!is_sym("^")) return base;
    SourceSpan at = next().span;
    if (peek().kind != Token::Int) throw ParseError(peek().span, "expected an exponent, found " + describe(peek()));
    const std::string& text = next().text;
    if (text.size() > 3) throw ParseError(at, "exponent is too large");
    Expr e;
    e.kind = Expr::Pow;
    e.span = at;
    e.exponent = static_cast<unsigned>(std::stoi(text));
    e.kids.push_back(std::move(base));
    return e;
  }
  Expr atom() {
    const Token& t = peek();
    Expr e;
    e.span = t.span;
    if (t.kind == Token::Int) {
      e.kind = Expr::Num;
      e.value = rational_literal();
      return e;
    }
    if (t.kind == Token::Ident) {
      e.kind = Expr::Var;
      e.name = next().text;
      return e;
    }
    if (is_sym("(")) {
      next();
      Expr inner = expr();
      expect_sym(")");
      return inner;
    }
    throw ParseError(t.span, "expected an expression, found " + describe(t));
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

AlgElement evaluate(const Expr& e, const ContextPtr& ctx) {
  switch (e.kind) {
    case Expr::Num:
      return AlgElement::constant(ctx, e.value);
    case Expr::Var: {
      auto g = ctx->find(e.name);
      if (!g) throw SemanticError(e.span, "unknown generator '" + e.name + "'");
      return AlgElement::generator(ctx, *g);
    }
    case Expr::Add:
      return evaluate(e.kids[0], ctx) + evaluate(e.kids[1], ctx);
    case Expr::Sub:
      return evaluate(e.kids[0], ctx) - evaluate(e.kids[1], ctx);
    case Expr::Mul:
      return evaluate(e.kids[0], ctx) * evaluate(e.kids[1], ctx);
    case Expr::Neg:
      return -evaluate(e.kids[0], ctx);
    case Expr::Pow:
      return power(evaluate(e.kids[0], ctx), e.exponent);
  }
  return AlgElement(ctx);
}

AlgElement evaluate_homogeneous(const Expr& e, const ContextPtr& ctx, SourceSpan at, const std::string& what) {
  AlgElement x = evaluate(e, ctx);
  if (!x.is_zero() && !x.is_homogeneous()) throw SemanticError(at, what + " is not homogeneous");
  return x;
}

CdgaDecl resolve(const RawCdga& raw) {
  CdgaDecl c;
  c.name = raw.name;
  c.span = raw.span;
  std::vector<Generator> gens;
  std::set<std::string> seen;
  for (const auto& g : raw.gens) {
    if (!seen.insert(g.name).second) throw SemanticError(g.span, "duplicate generator '" + g.name + "'");
    if (g.degree < 1) throw SemanticError(g.span, "generator '" + g.name + "' must have degree >= 1");
    gens.push_back({g.name, g.degree});
  }
  auto ctx = make_context(gens);
  std::vector<AlgElement> d(gens.size(), AlgElement(ctx));
  std::vector<bool> has(gens.size(), false);
  for (const auto& rd : raw.diffs) {
    auto g = ctx->find(rd.gen);
    if (!g) throw SemanticError(rd.span, "d of unknown generator '" + rd.gen + "'");
    if (has[*g]) throw SemanticError(rd.span, "second differential for '" + rd.gen + "'");
    has[*g] = true;
    AlgElement x = evaluate_homogeneous(rd.rhs, ctx, rd.span, "d " + rd.gen);
    int want = gens[*g].degree + 1;
    if (!x.is_zero() && *x.degree() != want)
      throw SemanticError(rd.span, "degree mismatch: d " + rd.gen + " must have degree " + std::to_string(want) +
                                       ", got " + std::to_string(*x.degree()));
    d[*g] = x;
  }
  c.presentation = SullivanPresentation(ctx, d);
  for (const auto& r : raw.rels) {
    AlgElement x = evaluate_homogeneous(r.rhs, ctx, r.span, "relation");
    if (x.is_zero()) continue;
    c.relations.push_back(x);
  }
  return c;
}

std::string expr_text(const AlgElement& x) { return x.to_string(); }

}  // namespace

// ---- document -------------------------------------------------------------

AlgebraPtr CdgaDecl::algebra(Budget budget) const {
  auto S = make_sullivan(presentation, budget);
  if (relations.empty()) return S;
  std::vector<Cochain> ideal;
  for (const auto& r : relations) ideal.push_back({*r.degree(), S->to_vector(*r.degree(), r)});
  return std::make_shared<const QuotientAlgebra>(S, std::move(ideal));
}

bool CdgaDecl::operator==(const CdgaDecl& o) const {
  return name == o.name && presentation == o.presentation && relations == o.relations;
}
bool MorphismDecl::operator==(const MorphismDecl& o) const {
  return name == o.name && source == o.source && target == o.target && images == o.images;
}
bool ArrangementDecl::operator==(const ArrangementDecl& o) const {
  return name == o.name && arrangement.ambient == o.arrangement.ambient &&
         arrangement.subspaces == o.arrangement.subspaces;
}
bool PdDecl::operator==(const PdDecl& o) const {
  return cdga == o.cdga && dimension == o.dimension && orientation == o.orientation;
}
bool CdgaDocument::operator==(const CdgaDocument& o) const {
  return cdgas == o.cdgas && morphisms == o.morphisms && arrangements == o.arrangements && pds == o.pds;
}

namespace {

template <class T, class Key>
const T& lookup(const std::vector<T>& v, std::string_view name, Key key, const char* what) {
  for (const auto& x : v)
    if (key(x) == name) return x;
  throw SemanticError({}, std::string("no ") + what + " named '" + std::string(name) + "'");
}

}  // namespace

const CdgaDecl& CdgaDocument::cdga(std::string_view name) const {
  return lookup(cdgas, name, [](const auto& x) { return x.name; }, "cdga");
}
const MorphismDecl& CdgaDocument::morphism(std::string_view name) const {
  return lookup(morphisms, name, [](const auto& x) { return x.name; }, "morphism");
}
const ArrangementDecl& CdgaDocument::arrangement(std::string_view name) const {
  return lookup(arrangements, name, [](const auto& x) { return x.name; }, "arrangement");
}
const PdDecl& CdgaDocument::pd(std::string_view name) const {
  return lookup(pds, name, [](const auto& x) { return x.cdga; }, "pd declaration for cdga");
}

CdgaDocument parse(std::string_view text) {
  std::vector<RawCdga> raw_cdgas;
  std::vector<RawMorphism> raw_morphisms;
  std::vector<RawPd> raw_pds;
  CdgaDocument doc;
  Parser(lex(text)).document(raw_cdgas, raw_morphisms, doc.arrangements, raw_pds);

  std::set<std::string> names;
  for (const auto& rc : raw_cdgas) {
    if (!names.insert(rc.name).second) throw SemanticError(rc.span, "duplicate cdga '" + rc.name + "'");
    doc.cdgas.push_back(resolve(rc));
  }
  auto find_cdga = [&](const std::string& n, SourceSpan at) -> const CdgaDecl& {
    for (const auto& c : doc.cdgas)
      if (c.name == n) return c;
    throw SemanticError(at, "unknown cdga '" + n + "'");
  };

  names.clear();
  for (const auto& rm : raw_morphisms) {
    if (!names.insert(rm.name).second) throw SemanticError(rm.span, "duplicate morphism '" + rm.name + "'");
    const auto& src = find_cdga(rm.source, rm.source_span);
    const auto& dst = find_cdga(rm.target, rm.target_span);
    if (!src.free()) throw SemanticError(rm.source_span, "morphism source '" + src.name + "' must be free (no rel)");
    MorphismDecl m{rm.name, rm.source, rm.target, {}, rm.span};
    const auto& sctx = src.presentation.context();
    const auto& tctx = dst.presentation.context();
    m.images.assign(sctx->size(), AlgElement(tctx));
    std::vector<bool> has(sctx->size(), false);
    for (const auto& mp : rm.maps) {
      auto g = sctx->find(mp.gen);
      if (!g) throw SemanticError(mp.span, "'" + mp.gen + "' is not a generator of '" + src.name + "'");
      if (has[*g]) throw SemanticError(mp.span, "second image for '" + mp.gen + "'");
      has[*g] = true;
      AlgElement x = evaluate_homogeneous(mp.rhs, tctx, mp.span, "image of " + mp.gen);
      if (!x.is_zero() && *x.degree() != sctx->degree(*g))
        throw SemanticError(mp.span, "degree mismatch: image of " + mp.gen + " must have degree " +
                                         std::to_string(sctx->degree(*g)) + ", got " + std::to_string(*x.degree()));
      m.images[*g] = x;
    }
    doc.morphisms.push_back(std::move(m));
  }

  names.clear();
  for (const auto& a : doc.arrangements)
    if (!names.insert(a.name).second) throw SemanticError(a.span, "duplicate arrangement '" + a.name + "'");

  names.clear();
  for (const auto& rp : raw_pds) {
    if (!names.insert(rp.cdga).second) throw SemanticError(rp.span, "second pd declaration for '" + rp.cdga + "'");
    const auto& c = find_cdga(rp.cdga, rp.span);
    if (rp.dim < 0) throw SemanticError(rp.span, "formal dimension must be nonnegative");
    AlgElement o = evaluate(rp.orientation, c.presentation.context());
    if (o.terms().size() != 1 || o.terms().begin()->second != 1 || o.degree() != rp.dim)
      throw SemanticError(rp.orientation.span,
                          "orientation must be a single monomial of degree " + std::to_string(rp.dim));
    doc.pds.push_back({rp.cdga, rp.dim, o, rp.span});
  }
  return doc;
}

AlgElement parse_expression(std::string_view text, const ContextPtr& ctx) {
  return evaluate(Parser(lex(text)).standalone_expr(), ctx);
}

// ---- canonical text -------------------------------------------------------

std::string serialize(const CdgaDecl& c) {
  std::ostringstream os;
  os << "cdga " << c.name << " {\n";
  const auto& ctx = *c.presentation.context();
  for (std::size_t i = 0; i < ctx.size(); ++i) os << "  gen " << ctx[i].name << ":" << ctx[i].degree << ";\n";
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (!c.presentation.d(i).is_zero()) os << "  d " << ctx[i].name << " = " << expr_text(c.presentation.d(i)) << ";\n";
  for (const auto& r : c.relations) os << "  rel " << expr_text(r) << ";\n";
  os << "}\n";
  return os.str();
}

std::string serialize(const MorphismDecl& m, const GeneratorContext& source) {
  std::ostringstream os;
  os << "morphism " << m.name << " : " << m.source << " -> " << m.target << " {\n";
  for (std::size_t i = 0; i < m.images.size(); ++i)
    if (!m.images[i].is_zero()) os << "  " << source[i].name << " |-> " << expr_text(m.images[i]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string serialize(const ArrangementDecl& a) {
  std::ostringstream os;
  os << "arrangement " << a.name << " ambient " << a.arrangement.ambient << " {\n";
  for (const auto& s : a.arrangement.subspaces) {
    os << "  subspace [";
    for (std::size_t r = 0; r < s.size(); ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t k = 0; k < s[r].size(); ++k) os << (k ? ", " : "") << to_string(s[r][k]);
      os << "]";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const PdDecl& p) {
  return "pd " + p.cdga + " dim " + std::to_string(p.dimension) + " orientation " + expr_text(p.orientation) + ";\n";
}

std::string serialize(const CdgaDocument& doc) {
  std::string out;
  auto add = [&](const std::string& block) {
    if (!out.empty()) out += "\n";
    out += block;
  };
  for (const auto& c : doc.cdgas) add(serialize(c));
  for (const auto& m : doc.morphisms) add(serialize(m, *doc.cdga(m.source).presentation.context()));
  for (const auto& a : doc.arrangements) add(serialize(a));
  for (const auto& p : doc.pds) add(serialize(p));
  return out;
}

CdgaDecl make_decl(std::string name, SullivanPresentation p) {
  CdgaDecl c;
  c.name = std::move(name);
  c.presentation = std::move(p);
  return c;
}

// ---- resolution -----------------------------------------------------------

Morphism make_morphism(const CdgaDocument& doc, const MorphismDecl& m, Budget budget) {
  const auto& src = doc.cdga(m.source);
  const auto& dst = doc.cdga(m.target);
  auto S = make_sullivan(src.presentation, budget);
  AlgebraPtr T = dst.algebra(budget);
  const SullivanAlgebra* ambient = dynamic_cast<const SullivanAlgebra*>(T.get());
  const QuotientAlgebra* quotient = dynamic_cast<const QuotientAlgebra*>(T.get());
  if (quotient) ambient = dynamic_cast<const SullivanAlgebra*>(&quotient->ambient());
  std::vector<SparseVec> images;
  for (std::size_t i = 0; i < m.images.size(); ++i) {
    int deg = src.presentation.context()->degree(i);
    SparseVec v = ambient->to_vector(deg, m.images[i]);
    images.push_back(quotient ? quotient->project(deg, v) : v);
  }
  return Morphism::on_generators(S, T, images);
}

PDAlgebra make_pd(const CdgaDocument& doc, const PdDecl& p) {
  const auto& c = doc.cdga(p.cdga);
  if (c.free()) return make_pd(c.presentation, p.dimension, p.orientation);
  auto A = c.algebra();
  const auto& q = static_cast<const QuotientAlgebra&>(*A);
  const auto& S = static_cast<const SullivanAlgebra&>(q.ambient());
  SparseVec w = q.project(p.dimension, S.to_vector(p.dimension, p.orientation));
  if (w.size() != 1 || w[0].second != 1)
    throw DegeneratePairing("orientation is not a basis element of the quotient");
  auto F = std::make_shared<const FiniteCDGA>(FiniteCDGA::from_view(*A, 0, p.dimension));
  return make_pd(F, p.dimension, {p.dimension, w[0].first});
}

}  // namespace rht
