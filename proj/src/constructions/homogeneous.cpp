#include "rht/constructions.hpp"

namespace rht {

namespace {

void require_odd(const std::vector<Generator>& gens, const char* what) {
  for (const auto& g : gens)
    if (g.degree % 2 == 0)
      throw DegreeMismatch(std::string(what) + " generator '" + g.name + "' must have odd degree");
}

// Writes x (in a context whose generators sit at `offset` in `target`) into target.
AlgElement shift_into(const AlgElement& x, const ContextPtr& target, std::size_t offset) {
  std::vector<std::size_t> remap(x.context()->size());
  for (std::size_t i = 0; i < remap.size(); ++i) remap[i] = offset + i;
  return transport(x, target, remap);
}

void check_images(const std::vector<Generator>& v_g, const std::vector<AlgElement>& images, const ContextPtr& ctx,
                  const char* what) {
  if (images.size() != v_g.size())
    throw DegreeMismatch(std::string(what) + ": expected " + std::to_string(v_g.size()) + " images, got " +
                         std::to_string(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& e = images[i];
    if (e.context() && !(*e.context() == *ctx))
      throw ContextMismatch(std::string(what) + ": image of '" + v_g[i].name + "' is in the wrong context");
    if (e.is_zero()) continue;
    auto deg = e.degree();
    if (!deg || *deg != v_g[i].degree + 1)
      throw DegreeMismatch(std::string(what) + ": image of '" + v_g[i].name + "' must be homogeneous of degree " +
                           std::to_string(v_g[i].degree + 1));
  }
}

}  // namespace

ContextPtr classifying_context(const std::vector<Generator>& odd_generators) {
  require_odd(odd_generators, "subgroup");
  std::vector<Generator> gens;
  for (const auto& g : odd_generators) gens.push_back({g.name, g.degree + 1});
  return make_context(gens);
}

SullivanPresentation homogeneous_space_model(const std::vector<Generator>& v_g, const std::vector<Generator>& v_h,
                                             const std::vector<AlgElement>& phi) {
  return biquotient_model(v_g, v_h, {}, phi, std::vector<AlgElement>(v_g.size()));
}

SullivanPresentation biquotient_model(const std::vector<Generator>& v_g, const std::vector<Generator>& v_h,
                                      const std::vector<Generator>& v_k, const std::vector<AlgElement>& f,
                                      const std::vector<AlgElement>& g) {
  require_odd(v_g, "group");
  auto bh = classifying_context(v_h);
  auto bk = classifying_context(v_k);
  check_images(v_g, f, bh, "H-side map");
  check_images(v_g, g, bk, "K-side map");

  std::vector<Generator> all = bk->generators();
  for (const auto& x : bh->generators()) all.push_back(x);
  for (const auto& x : v_g) all.push_back(x);
  auto ctx = make_context(all);  // throws on duplicate names

  std::vector<AlgElement> d(all.size(), AlgElement(ctx));
  for (std::size_t i = 0; i < v_g.size(); ++i) {
    AlgElement di(ctx);
    if (!f[i].is_zero()) di += shift_into(f[i], ctx, bk->size());
    if (!g[i].is_zero()) di -= shift_into(g[i], ctx, 0);
    d[bk->size() + bh->size() + i] = di;
  }
  return SullivanPresentation(ctx, d);
}

}  // namespace rht
