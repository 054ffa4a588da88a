#pragma once

#include "rht/cdga.hpp"

#include <stdexcept>

namespace rht {

class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Provenance { Cokernel, KernelKilling };
const char* to_string(Provenance p);

struct MinimalModelOptions {
  int max_degree = 16;
  LinalgOptions linalg;
  Budget budget;
};

struct MinimalModelResult {
  SullivanPresentation model;
  SullivanPtr model_algebra;
  Morphism phi;  // model → input
  int certified_degree = 0;
  std::vector<Provenance> provenance;  // per generator
};

// Degree-by-degree construction for inputs with H⁰ = ℚ and H¹ = 0. After
// stage n the comparison map is an isomorphism in degrees ≤ n and injective
// in degree n+1.
MinimalModelResult minimal_model(AlgebraPtr input, const MinimalModelOptions& opts = {});

bool is_minimal(const SullivanPresentation& p);

struct SullivanCertificate {
  bool ok = false;
  // Generators added at each stage of V(0) ⊂ V(1) ⊂ …
  std::vector<std::vector<std::size_t>> levels;
  std::vector<std::size_t> stuck;
};
SullivanCertificate is_sullivan(const SullivanPresentation& p);

std::map<int, std::size_t> generator_counts(const SullivanPresentation& p, int max_degree);

class InvalidExtension : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Relative Sullivan algebra (ΛW ⊗ ΛZ, d); total lists W's generators first.
struct LambdaExtension {
  SullivanPresentation base;
  SullivanPresentation total;
  std::vector<int> filtration;  // per Z generator

  std::size_t fiber_offset() const { return base.size(); }
  std::size_t fiber_size() const { return total.size() - base.size(); }
};

LambdaExtension make_extension(SullivanPresentation base, SullivanPresentation total);
// New extension over phi's target with d'(z) = (φ⊗id)(dz).
LambdaExtension pushout_extension(const Morphism& phi, const LambdaExtension& ext);
SullivanPresentation fiber_model(const LambdaExtension& ext);

struct AcyclicClosure {
  LambdaExtension ext;
  std::vector<std::size_t> alpha;  // fiber generator k ↦ base generator it desuspends
  int verified_degree = 0;
};
AcyclicClosure acyclic_closure(const SullivanPresentation& p, int max_degree, const LinalgOptions& opts = {},
                               Budget budget = {});

}  // namespace rht
