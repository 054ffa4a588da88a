#include "rht/constructions.hpp"

namespace rht {

namespace {

struct DerivationComplex {
  const SullivanPresentation& v;
  const SullivanPresentation& w;
  const std::vector<AlgElement>& phi;
  const SullivanAlgebra& W;

  AlgElement phi_of(const Monomial& m) const {
    AlgElement r = AlgElement::constant(w.context(), 1);
    for (const auto& f : m.factors())
      for (std::uint32_t e = 0; e < f.exp; ++e) r = r * phi[f.gen];
    return r;
  }
  AlgElement phi_of(const AlgElement& x) const {
    AlgElement r(w.context());
    for (const auto& [m, c] : x.terms()) r += phi_of(m) * c;
    return r;
  }

  // θ of degree n (lowering degree by n) on a monomial, from θ on generators.
  AlgElement theta_of(const Monomial& m, int n, const std::vector<AlgElement>& theta) const {
    std::vector<std::uint32_t> seq;
    for (const auto& f : m.factors())
      for (std::uint32_t e = 0; e < f.exp; ++e) seq.push_back(f.gen);
    AlgElement r(w.context());
    int prefix = 0;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      AlgElement t = AlgElement::constant(w.context(), (n * prefix) % 2 ? -1 : 1);
      for (std::size_t k = 0; k < seq.size(); ++k) t = t * (k == j ? theta[seq[k]] : phi[seq[k]]);
      r += t;
      prefix += v.context()->degree(seq[j]);
    }
    return r;
  }

  struct Slot {
    std::size_t gen;
    int degree;
    std::size_t offset;
  };
  std::vector<Slot> slots(int n) const {
    std::vector<Slot> out;
    std::size_t off = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      int t = v.context()->degree(i) - n;
      if (t < 0) continue;
      out.push_back({i, t, off});
      off += W.dim(t);
    }
    return out;
  }
  static std::size_t size(const std::vector<Slot>& s, const SullivanAlgebra& W) {
    return s.empty() ? 0 : s.back().offset + W.dim(s.back().degree);
  }

  // Matrix of D: Der_n → Der_{n−1}.
  RationalMatrix matrix(int n) const {
    auto src = slots(n), dst = slots(n - 1);
    std::vector<SparseVec> cols;
    for (const auto& s : src)
      for (std::size_t b = 0; b < W.dim(s.degree); ++b) {
        std::vector<AlgElement> theta(v.size(), AlgElement(w.context()));
        theta[s.gen] = W.to_element(s.degree, sv::unit(static_cast<std::uint32_t>(b)));
        std::vector<std::pair<std::uint32_t, Rational>> entries;
        for (const auto& t : dst) {
          AlgElement image = w.apply_d(theta[t.gen]);
          AlgElement td(w.context());
          for (const auto& [m, c] : v.d(t.gen).terms()) td += theta_of(m, n, theta) * c;
          image -= td * Rational(n % 2 ? -1 : 1);
          for (const auto& [i, c] : W.to_vector(t.degree, image))
            entries.emplace_back(static_cast<std::uint32_t>(t.offset + i), c);
        }
        cols.push_back(sv::collect(entries));
      }
    return RationalMatrix::from_columns(size(dst, W), cols);
  }
};

}  // namespace

MappingSpaceResult mapping_space_pi(const SullivanPresentation& v, const SullivanPresentation& w,
                                    const std::vector<AlgElement>& phi_in, int n, const LinalgOptions& opts,
                                    Budget budget) {
  if (n < 1) throw std::invalid_argument("mapping_space_pi needs n >= 1");
  if (phi_in.size() != v.size()) throw std::invalid_argument("mapping_space_pi: one image per generator required");
  std::vector<AlgElement> phi;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& e = phi_in[i];
    AlgElement img = e.is_zero() ? AlgElement(w.context()) : e;
    if (!img.is_zero() && img.degree() != v.context()->degree(i))
      throw DegreeMismatch("image of '" + (*v.context())[i].name + "' has the wrong degree");
    phi.push_back(img);
  }
  SullivanAlgebra W(w, budget);
  DerivationComplex cx{v, w, phi, W};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(w.apply_d(phi[i]) == cx.phi_of(v.d(i))))
      throw std::invalid_argument("mapping_space_pi: φ does not commute with the differentials at '" +
                                  (*v.context())[i].name + "'");

  MappingSpaceResult r;
  r.n = n;
  for (const auto& s : cx.slots(n))
    if (W.dim(s.degree) > 0) r.contributing.emplace_back(s.gen, s.degree);
  auto out = solve_linear(cx.matrix(n), {}, opts);
  auto in = solve_linear(cx.matrix(n + 1), {}, opts);
  r.cycles = out.kernel.size();
  r.boundaries = in.rank;
  r.dimension = r.cycles - r.boundaries;
  return r;
}

}  // namespace rht
