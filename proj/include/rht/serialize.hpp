#pragma once

#include "rht/interface.hpp"

#include "json.hpp"

namespace rht {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "rht/1";

// {"schema": ..., "kind": kind}; windowed results add "certified_degree".
Json envelope(std::string_view kind);
Json envelope(std::string_view kind, int certified_degree);

// Rationals are "p/q" strings; monomials map generator names to exponents.
Json to_json(const Rational& q);
Json to_json(const AlgElement& x);
Json to_json(const SullivanPresentation& p, std::string_view name);
Json to_json(const FiniteCDGA& a);
Json to_json(const CohomologyReport& r);
Json to_json(const MinimalModelResult& r, std::string_view name);
Json to_json(const LieTable& t);
Json to_json(const FiltrationReport& f);
Json to_json(const HurewiczReport& h);
Json to_json(const RationalMatrix& m);
Json to_json(const HolonomyReport& h, const GeneratorContext& base);
Json to_json(const IntersectionLattice& l);

// Indented "key: value" rendering of a JSON value, used for text output.
std::string render_text(const Json& j);

}  // namespace rht
