#include "rht/homotopy_lie.hpp"

namespace rht {

namespace {

int parity_sign(long long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

SullivanPresentation quadratic_part(const SullivanPresentation& p) {
  if (!is_minimal(p)) throw std::invalid_argument("quadratic part needs a minimal presentation");
  std::vector<AlgElement> d1;
  for (const auto& dv : p.differentials()) {
    AlgElement q(p.context());
    for (const auto& [m, c] : dv.terms())
      if (m.word_length() == 2) q.add_term(m, c);
    d1.push_back(std::move(q));
  }
  SullivanPresentation out(p.context(), std::move(d1));
  auto D = out.derivation();
  for (std::size_t g = 0; g < out.size(); ++g)
    if (!D.apply(out.d(g)).is_zero()) throw std::logic_error("quadratic part does not square to zero");
  return out;
}

std::map<int, std::size_t> homotopy_ranks(const SullivanPresentation& p, int n) { return generator_counts(p, n); }

LieTable::LieTable(const SullivanPresentation& p, int max_degree)
    : quadratic_(quadratic_part(p)), max_degree_(max_degree) {
  const auto& ctx = *p.context();
  for (int k = 0; k <= max_degree; ++k) basis_[k];
  position_.assign(ctx.size(), {-1, 0});
  for (std::size_t g = 0; g < ctx.size(); ++g) {
    int k = ctx.degree(g) - 1;
    if (k > max_degree) continue;
    position_[g] = {k, basis_[k].size()};
    basis_[k].push_back(g);
  }
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    auto [kv, iv] = position_[v];
    if (kv < 0) continue;
    for (const auto& [m, c] : quadratic_.d(v).terms()) {
      auto f = m.factors();
      std::uint32_t first = f[0].gen;
      std::uint32_t second = f.size() == 1 ? f[0].gen : f[1].gen;
      int sign = parity_sign(static_cast<long long>(ctx.degree(first)) * ctx.degree(second));
      // ⟨v∧w; s x_i, s x_j⟩ for the ordered pairs (i, j) it can detect.
      std::map<std::pair<std::uint32_t, std::uint32_t>, int> pairing;
      pairing[{second, first}] += 1;
      pairing[{first, second}] += sign;
      for (const auto& [ij, val] : pairing) {
        if (val == 0) continue;
        auto [i, j] = ij;
        auto [ki, ii] = position_[i];
        auto [kj, jj] = position_[j];
        if (ki < 0 || kj < 0) continue;
        Rational coeff = c * val * parity_sign(kj + 1);
        auto& slot = table_[{ki, ii, kj, jj}];
        slot = sv::axpy(slot, coeff, sv::unit(static_cast<std::uint32_t>(iv)));
      }
    }
  }
}

std::size_t LieTable::dim(int k) const {
  auto it = basis_.find(k);
  return it == basis_.end() ? 0 : it->second.size();
}

std::optional<std::pair<int, std::size_t>> LieTable::find(std::string_view name) const {
  auto g = quadratic_.context()->find(name);
  if (!g || position_[*g].first < 0) return std::nullopt;
  return position_[*g];
}

std::string LieTable::label(int k, std::size_t i) const { return "x_" + (*quadratic_.context())[generator(k, i)].name; }

SparseVec LieTable::bracket_basis(int p, std::size_t i, int q, std::size_t j) const {
  if (p < 0 || q < 0 || p + q > max_degree_)
    throw OutOfBound("bracket of degrees " + std::to_string(p) + " and " + std::to_string(q) +
                     " exceeds the table bound " + std::to_string(max_degree_));
  auto it = table_.find({p, i, q, j});
  return it == table_.end() ? SparseVec{} : it->second;
}

SparseVec LieTable::bracket(int p, const SparseVec& x, int q, const SparseVec& y) const {
  SparseVec out;
  if (p < 0 || q < 0 || p + q > max_degree_)
    throw OutOfBound("bracket of degrees " + std::to_string(p) + " and " + std::to_string(q) +
                     " exceeds the table bound " + std::to_string(max_degree_));
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      auto it = table_.find({p, i, q, j});
      if (it != table_.end()) out = sv::axpy(out, a * b, it->second);
    }
  return out;
}

std::string LieTable::format(int k, const SparseVec& x) const {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : x) {
    Rational a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (a != 1) s += to_string(a) + "*";
    s += label(k, i);
    first = false;
  }
  return s;
}

std::vector<std::string> check_lie_axioms(const LieTable& t) {
  std::vector<std::string> bad;
  const int K = t.max_degree();
  auto name = [&](int k, std::size_t i) { return t.label(k, i); };
  for (int p = 0; p <= K; ++p)
    for (int q = 0; p + q <= K; ++q)
      for (std::size_t i = 0; i < t.dim(p); ++i)
        for (std::size_t j = 0; j < t.dim(q); ++j) {
          auto xy = t.bracket_basis(p, i, q, j);
          auto yx = t.bracket_basis(q, j, p, i);
          if (sv::add(xy, sv::scale(yx, parity_sign(static_cast<long long>(p) * q))) != SparseVec{})
            bad.push_back("antisymmetry fails for [" + name(p, i) + ", " + name(q, j) + "]");
        }
  for (int p = 0; p <= K; ++p)
    for (int q = 0; p + q <= K; ++q)
      for (int r = 0; p + q + r <= K; ++r)
        for (std::size_t i = 0; i < t.dim(p); ++i)
          for (std::size_t j = 0; j < t.dim(q); ++j)
            for (std::size_t l = 0; l < t.dim(r); ++l) {
              auto x = sv::unit(static_cast<std::uint32_t>(i));
              auto y = sv::unit(static_cast<std::uint32_t>(j));
              auto z = sv::unit(static_cast<std::uint32_t>(l));
              SparseVec sum;
              sum = sv::axpy(sum, parity_sign(static_cast<long long>(p) * r), t.bracket(p, x, q + r, t.bracket(q, y, r, z)));
              sum = sv::axpy(sum, parity_sign(static_cast<long long>(q) * p), t.bracket(q, y, r + p, t.bracket(r, z, p, x)));
              sum = sv::axpy(sum, parity_sign(static_cast<long long>(r) * q), t.bracket(r, z, p + q, t.bracket(p, x, q, y)));
              if (!sum.empty())
                bad.push_back("Jacobi fails for " + name(p, i) + ", " + name(q, j) + ", " + name(r, l));
            }
  return bad;
}

WhiteheadProduct whitehead_product(const LieTable& t, int k, const SparseVec& alpha, int l, const SparseVec& beta) {
  if (k < 1 || l < 1) throw OutOfBound("homotopy degrees must be at least 1");
  WhiteheadProduct w;
  w.degree = k + l - 1;
  if (k == 1 && l == 1) {
    int c = nilpotency_class(t);
    SparseVec ab = bch_product(t, c, alpha, beta);
    SparseVec inv = bch_product(t, c, sv::scale(alpha, -1), sv::scale(beta, -1));
    w.value = bch_product(t, c, ab, inv);
    w.group_commutator = true;
    return w;
  }
  w.value = sv::scale(t.bracket(k - 1, alpha, l - 1, beta), parity_sign(k - 1));
  return w;
}

HurewiczReport hurewicz_matrix(const SullivanPresentation& p, int k, const LinalgOptions& opts) {
  auto S = make_sullivan(p);
  auto H = cohomology_at(*S, k, opts);
  std::vector<std::size_t> gens;
  for (std::size_t g = 0; g < p.size(); ++g)
    if (p.context()->degree(g) == k) gens.push_back(g);
  std::vector<SparseVec> cols;
  for (const auto& rep : H.representatives) {
    AlgElement x = S->to_element(k, rep);
    SparseVec col;
    for (std::size_t r = 0; r < gens.size(); ++r) {
      Rational c = x.coefficient(Monomial::generator(static_cast<std::uint32_t>(gens[r])));
      if (c != 0) col.emplace_back(static_cast<std::uint32_t>(r), c);
    }
    cols.push_back(std::move(col));
  }
  HurewiczReport rep;
  rep.k = k;
  rep.matrix = RationalMatrix::from_columns(gens.size(), cols);
  rep.rank = rank_of(cols, gens.size(), opts);
  rep.kernel_dim = H.dim() - rep.rank;
  rep.cokernel_dim = gens.size() - rep.rank;
  return rep;
}

}  // namespace rht
