#include "rht/minimal_model.hpp"

#include <set>

namespace rht {

const char* to_string(Provenance p) { return p == Provenance::Cokernel ? "cokernel" : "kernel-killing"; }

namespace {

std::string fresh_name(const std::vector<Generator>& gens, int degree, int& counter) {
  GeneratorContext ctx(gens);
  for (;;) {
    std::string cand = "v" + std::to_string(degree) + "_" + std::to_string(++counter);
    if (!ctx.find(cand)) return cand;
  }
}

}  // namespace

MinimalModelResult minimal_model(AlgebraPtr input, const MinimalModelOptions& opts) {
  const int N = opts.max_degree;
  const GradedAlgebra& A = *input;
  if (A.min_degree() < 0) {
    for (int n = A.min_degree(); n < 0; ++n)
      if (cohomology_at(A, n, opts.linalg).dim() != 0)
        throw UnsupportedInput("input has cohomology in negative degree " + std::to_string(n));
  }
  std::vector<CohomologyDegree> HA;
  for (int n = 0; n <= N + 1; ++n) HA.push_back(cohomology_at(A, n, opts.linalg));
  if (HA[0].dim() != 1) throw UnsupportedInput("H^0 of the input is not one-dimensional");
  auto u = A.unit_index();
  if (!u || HA[0].class_of(sv::unit(static_cast<std::uint32_t>(*u))).empty())
    throw UnsupportedInput("H^0 of the input is not spanned by the unit");
  if (N >= 1 && HA[1].dim() != 0)
    throw UnsupportedInput("H^1 of the input is nonzero; the degree-wise construction needs a simply connected input");

  std::vector<Generator> gens;
  std::vector<AlgElement> diffs;  // in the context of the moment they were made
  std::vector<SparseVec> images;
  std::vector<Provenance> prov;
  int counter = 0;

  SullivanPresentation current;
  auto rebuild = [&](const std::vector<Generator>& new_gens, const std::vector<AlgElement>& new_d) {
    current = with_generators(current, new_gens, new_d);
  };
  auto algebra = make_sullivan(current, opts.budget);
  auto phi = Morphism::on_generators(algebra, input, images);

  for (int n = 2; n <= N; ++n) {
    // Cokernel of H^n(φ): new cocycle generators.
    {
      auto hs = cohomology_at(*algebra, n, opts.linalg);
      const auto& ha = HA[static_cast<std::size_t>(n)];
      Echelon img(ha.dim(), opts.linalg);
      for (const auto& rep : hs.representatives) img.insert(ha.class_of(phi.apply(n, rep)));
      std::vector<Generator> ng;
      std::vector<AlgElement> nd;
      for (std::size_t j = 0; j < ha.dim(); ++j) {
        if (!img.insert(sv::unit(static_cast<std::uint32_t>(j)))) continue;
        ng.push_back({fresh_name(gens, n, counter), n});
        gens.push_back(ng.back());
        nd.emplace_back();
        images.push_back(ha.representatives[j]);
        prov.push_back(Provenance::Cokernel);
      }
      if (!ng.empty()) {
        rebuild(ng, nd);
        algebra = make_sullivan(current, opts.budget);
        phi = Morphism::on_generators(algebra, input, images);
      }
    }
    // Kernel of H^{n+1}(φ): generators of degree n killing it.
    {
      auto hs = cohomology_at(*algebra, n + 1, opts.linalg);
      const auto& ha = HA[static_cast<std::size_t>(n + 1)];
      auto m = cohomology_map(phi, n + 1, hs, ha);
      auto ker = solve_linear(m, {}, opts.linalg).kernel;
      if (ker.empty()) continue;
      std::vector<SparseVec> cocycles, targets;
      for (const auto& k : ker) {
        SparseVec z;
        for (const auto& [i, c] : k) z = sv::axpy(z, c, hs.representatives[i]);
        cocycles.push_back(z);
        targets.push_back(phi.apply(n + 1, z));
      }
      auto sol = solve_linear(differential_matrix(A, n), targets, opts.linalg);
      std::vector<Generator> ng;
      std::vector<AlgElement> nd;
      for (std::size_t k = 0; k < cocycles.size(); ++k) {
        if (!sol.solutions[k]) throw std::logic_error("kernel class is not a coboundary in the input");
        ng.push_back({fresh_name(gens, n, counter), n});
        gens.push_back(ng.back());
        nd.push_back(algebra->to_element(n + 1, cocycles[k]));
        images.push_back(*sol.solutions[k]);
        prov.push_back(Provenance::KernelKilling);
      }
      rebuild(ng, nd);
      algebra = make_sullivan(current, opts.budget);
      phi = Morphism::on_generators(algebra, input, images);
    }
  }

  MinimalModelResult r;
  r.model = current;
  r.model_algebra = algebra;
  r.phi = phi;
  r.certified_degree = N;
  r.provenance = prov;
  return r;
}

bool is_minimal(const SullivanPresentation& p) {
  for (const auto& dv : p.differentials())
    for (const auto& [m, c] : dv.terms())
      if (m.word_length() < 2) return false;
  return true;
}

SullivanCertificate is_sullivan(const SullivanPresentation& p) {
  SullivanCertificate cert;
  std::vector<bool> placed(p.size(), false);
  std::size_t count = 0;
  for (;;) {
    std::vector<std::size_t> level;
    for (std::size_t g = 0; g < p.size(); ++g) {
      if (placed[g]) continue;
      bool ok = true;
      for (const auto& [m, c] : p.d(g).terms())
        for (const auto& f : m.factors())
          if (!placed[f.gen]) ok = false;
      if (ok) level.push_back(g);
    }
    if (level.empty()) break;
    for (auto g : level) placed[g] = true;
    count += level.size();
    cert.levels.push_back(std::move(level));
  }
  cert.ok = count == p.size();
  for (std::size_t g = 0; g < p.size(); ++g)
    if (!placed[g]) cert.stuck.push_back(g);
  return cert;
}

std::map<int, std::size_t> generator_counts(const SullivanPresentation& p, int max_degree) {
  std::map<int, std::size_t> counts;
  for (int k = 1; k <= max_degree; ++k) counts[k] = 0;
  for (std::size_t g = 0; g < p.size(); ++g) {
    int d = p.context()->degree(g);
    if (d <= max_degree) ++counts[d];
  }
  return counts;
}

}  // namespace rht
