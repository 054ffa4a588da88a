#include "rht/homotopy_lie.hpp"

#include <mutex>

namespace rht {

namespace {

FreeElement mul(const FreeElement& x, const FreeElement& y, int c) {
  FreeElement out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) {
      if (static_cast<int>(u.size() + v.size()) > c) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      Rational& slot = out[w];
      slot += a * b;
      if (slot == 0) out.erase(w);
    }
  return out;
}

void axpy(FreeElement& x, const Rational& c, const FreeElement& y) {
  for (const auto& [w, a] : y) {
    Rational& slot = x[w];
    slot += c * a;
    if (slot == 0) x.erase(w);
  }
}

FreeElement exp_letter(std::uint8_t letter, int c) {
  FreeElement out{{Word{}, Rational(1)}};
  Rational fact = 1;
  for (int k = 1; k <= c; ++k) {
    fact *= k;
    out[Word(static_cast<std::size_t>(k), letter)] = Rational(1) / fact;
  }
  return out;
}

}  // namespace

FreeElement bch_series(int c) {
  FreeElement p = mul(exp_letter(0, c), exp_letter(1, c), c);
  p.erase(Word{});
  FreeElement out, power = p;
  for (int k = 1; k <= c; ++k) {
    Rational coeff = Rational(k % 2 ? 1 : -1) / k;
    axpy(out, coeff, power);
    power = mul(power, p, c);
  }
  return out;
}

std::vector<std::pair<Rational, Word>> dynkin_form(const FreeElement& lie_series) {
  std::vector<std::pair<Rational, Word>> out;
  for (const auto& [w, c] : lie_series) out.emplace_back(c / static_cast<long>(w.size()), w);
  return out;
}

SparseVec bch_product(const LieTable& t, int c, const SparseVec& a, const SparseVec& b) {
  int cls = nilpotency_class(t);
  if (cls > c)
    throw NotNilpotent("L_0 has nilpotency class " + std::to_string(cls) + ", above the requested class " +
                       std::to_string(c));
  if (c < 1) return sv::add(a, b);
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<Rational, Word>>> cache;
  std::vector<std::pair<Rational, Word>> terms;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, dynkin_form(bch_series(c))).first;
    terms = it->second;
  }
  std::map<Word, SparseVec> prefix;  // left-normed bracket of each word prefix
  auto value = [&](const Word& w) {
    SparseVec cur = w[0] == 0 ? a : b;
    Word pre{w[0]};
    for (std::size_t k = 1; k < w.size() && !cur.empty(); ++k) {
      pre.push_back(w[k]);
      auto it = prefix.find(pre);
      if (it == prefix.end()) it = prefix.emplace(pre, t.bracket(0, cur, 0, w[k] == 0 ? a : b)).first;
      cur = it->second;
    }
    return cur;
  };
  SparseVec out;
  for (const auto& [q, w] : terms) {
    if (w.empty()) continue;
    out = sv::axpy(out, q, value(w));
  }
  return out;
}

}  // namespace rht
