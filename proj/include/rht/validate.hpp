#pragma once

#include "rht/cohomology.hpp"

#include <string>
#include <vector>

namespace rht {

struct Violation {
  std::string kind;   // degree, d_squared, constant_term, leibniz, commutativity, associativity, unit, ideal_stability, chain_map, multiplicativity
  std::string where;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void merge(const ValidationReport& o) { violations.insert(violations.end(), o.violations.begin(), o.violations.end()); }
};

ValidationReport validate(const SullivanPresentation& p);
// Structure-constant checks of a degree window: d² = 0, Leibniz,
// graded commutativity, associativity and unit on basis elements.
ValidationReport validate_window(const GradedAlgebra& a, int lo, int hi, bool check_associativity = true);
ValidationReport validate(const FiniteCDGA& a);
ValidationReport validate(const RelativeAlgebra& a);
// Ideal stability d(g) ∈ I for each generator, plus the ambient's own checks.
ValidationReport validate(const QuotientAlgebra& q, int max_degree);
ValidationReport validate(const Morphism& f, int max_degree);
// Dispatches on the dynamic type.
ValidationReport validate_any(const GradedAlgebra& a, int max_degree);

}  // namespace rht
