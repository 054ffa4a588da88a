#pragma once

#include "rht/constructions.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace rht {

struct SourceSpan {
  int line = 0;
  int column = 0;
};

// Malformed text; CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan at, const std::string& msg);
  SourceSpan span;
};

// Well-formed text with inconsistent content; CLI exit code 1.
class SemanticError : public std::runtime_error {
 public:
  SemanticError(SourceSpan at, const std::string& msg);
  SourceSpan span;
};

struct CdgaDecl {
  std::string name;
  SullivanPresentation presentation;
  std::vector<AlgElement> relations;  // rel statements; nonempty means a quotient
  SourceSpan span;

  // ΛV, or ΛV/(relations) when relations are present.
  AlgebraPtr algebra(Budget budget = {}) const;
  bool free() const { return relations.empty(); }
  bool operator==(const CdgaDecl& o) const;
};

struct MorphismDecl {
  std::string name, source, target;
  std::vector<AlgElement> images;  // per source generator, in the target's context
  SourceSpan span;
  bool operator==(const MorphismDecl& o) const;
};

struct ArrangementDecl {
  std::string name;
  SubspaceArrangement arrangement;
  SourceSpan span;
  bool operator==(const ArrangementDecl& o) const;
};

struct PdDecl {
  std::string cdga;
  int dimension = 0;
  AlgElement orientation;
  SourceSpan span;
  bool operator==(const PdDecl& o) const;
};

struct CdgaDocument {
  std::vector<CdgaDecl> cdgas;
  std::vector<MorphismDecl> morphisms;
  std::vector<ArrangementDecl> arrangements;
  std::vector<PdDecl> pds;

  const CdgaDecl& cdga(std::string_view name) const;
  const MorphismDecl& morphism(std::string_view name) const;
  const ArrangementDecl& arrangement(std::string_view name) const;
  const PdDecl& pd(std::string_view cdga_name) const;
  bool operator==(const CdgaDocument& o) const;
};

// Statements:
//   cdga NAME { gen a:2; gen b:3; d b = a^2; rel a^3; }
//   morphism NAME : SRC -> DST { a |-> EXPR; }
//   arrangement NAME ambient N { subspace [[1,-1,0]]; }
//   pd NAME dim M orientation MONOMIAL;
// Comments run from '#' or '//' to the end of the line.
CdgaDocument parse(std::string_view text);
// A single expression over the generators of ctx.
AlgElement parse_expression(std::string_view text, const ContextPtr& ctx);

// Canonical text: declarations in document order, zero differentials and
// zero images omitted.
std::string serialize(const CdgaDocument& doc);
std::string serialize(const CdgaDecl& c);
std::string serialize(const MorphismDecl& m, const GeneratorContext& source);
std::string serialize(const ArrangementDecl& a);
std::string serialize(const PdDecl& p);
CdgaDecl make_decl(std::string name, SullivanPresentation p);

// Resolved objects.
Morphism make_morphism(const CdgaDocument& doc, const MorphismDecl& m, Budget budget = {});
PDAlgebra make_pd(const CdgaDocument& doc, const PdDecl& p);

}  // namespace rht
