#include "rht/constructions.hpp"

namespace rht {

SullivanPresentation free_loop_model(const SullivanPresentation& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    if (p.context()->degree(i) < 2)
      throw UnsupportedInput("free loop model needs V = V^{>=2}; '" + (*p.context())[i].name + "' has degree " +
                             std::to_string(p.context()->degree(i)));
  std::vector<Generator> all = p.context()->generators();
  for (std::size_t i = 0; i < n; ++i) {
    GeneratorContext sofar(all);
    all.push_back({unique_name(sofar, "s" + (*p.context())[i].name), p.context()->degree(i) - 1});
  }
  auto ctx = make_context(all);

  std::vector<std::optional<AlgElement>> s_images(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    s_images[i] = AlgElement::generator(ctx, n + i);
    s_images[n + i] = AlgElement(ctx);
  }
  Derivation s(ctx, -1, s_images);

  std::vector<AlgElement> d;
  for (const auto& x : p.differentials()) d.push_back(widen(x, ctx));
  for (std::size_t i = 0; i < n; ++i) d.push_back(-s.apply(d[i]));
  SullivanPresentation out(ctx, d);
  auto D = out.derivation();
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!D.apply(out.d(i)).is_zero()) throw std::logic_error("free loop model: D^2 != 0");
  return out;
}

}  // namespace rht
