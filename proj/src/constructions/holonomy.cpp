#include "rht/constructions.hpp"

namespace rht {

namespace {

bool is_nilpotent(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return false;
  std::vector<SparseVec> cols = m.columns();
  for (std::size_t k = 0; k < m.rows(); ++k) {
    bool zero = true;
    for (auto& c : cols) {
      c = m.apply(c);
      zero = zero && c.empty();
    }
    if (zero) return true;
  }
  return m.rows() == 0;
}

}  // namespace

HolonomyReport holonomy_representation(const LambdaExtension& ext, int max_degree, const LinalgOptions& opts,
                                       Budget budget) {
  HolonomyReport r;
  r.window = max_degree;
  r.fiber = fiber_model(ext);
  auto F = make_sullivan(r.fiber, budget);
  const std::size_t offset = ext.fiber_offset();
  const auto& total_ctx = ext.total.context();
  for (int n = 0; n <= max_degree; ++n) r.fiber_cohomology[n] = cohomology_at(*F, n, opts);

  std::vector<std::size_t> to_total(r.fiber.size());
  for (std::size_t k = 0; k < to_total.size(); ++k) to_total[k] = offset + k;

  for (int n = 0; n <= max_degree; ++n) {
    const auto& H = r.fiber_cohomology[n];
    if (H.dim() == 0) continue;
    // coefficient of w_i in d(Φ_j), as fiber elements
    std::vector<std::vector<AlgElement>> coeff(offset, std::vector<AlgElement>(H.dim(), AlgElement(r.fiber.context())));
    for (std::size_t j = 0; j < H.dim(); ++j) {
      AlgElement phi = transport(F->to_element(n, H.representatives[j]), total_ctx, to_total);
      const AlgElement dphi = ext.total.apply_d(phi);
      for (const auto& [m, c] : dphi.terms()) {
        std::optional<std::uint32_t> w;
        bool linear = true;
        std::vector<Monomial::Factor> rest;
        for (const auto& f : m.factors()) {
          if (f.gen < offset) {
            if (w || f.exp > 1) linear = false;
            w = f.gen;
          } else {
            rest.push_back({static_cast<std::uint32_t>(f.gen - offset), f.exp});
          }
        }
        if (!w || !linear) continue;
        coeff[*w][j].add_term(Monomial::from_factors(rest), c);
      }
    }
    for (std::size_t w = 0; w < offset; ++w) {
      int target = n + 1 - total_ctx->degree(w);
      if (target < 0) continue;
      const auto& Ht = target <= max_degree ? r.fiber_cohomology[target] : cohomology_at(*F, target, opts);
      std::vector<SparseVec> cols;
      for (std::size_t j = 0; j < H.dim(); ++j) {
        SparseVec v = F->to_vector(target, coeff[w][j]);
        if (!apply_d(*F, target, v).empty())
          throw std::logic_error("holonomy: W-linear coefficient is not a fiber cocycle (base not minimal?)");
        cols.push_back(Ht.class_of(v));
      }
      HolonomyBlock b{w, n, RationalMatrix::from_columns(Ht.dim(), cols)};
      if (target == n && !is_nilpotent(b.matrix)) r.nilpotent = false;
      r.blocks.push_back(std::move(b));
    }
  }
  return r;
}

}  // namespace rht
