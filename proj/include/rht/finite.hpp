#pragma once

#include "rht/graded.hpp"

#include <map>
#include <string_view>
#include <tuple>
#include <vector>

namespace rht {

// Finite-dimensional cdga with explicit structure constants.
class FiniteCDGA : public GradedAlgebra {
 public:
  struct Ref {
    int degree = 0;
    std::size_t index = 0;
    bool operator==(const Ref&) const = default;
  };

  class Builder {
   public:
    Ref add(int degree, std::string label);
    void set_unit(Ref u) { unit_ = u; }
    void set_product(Ref a, Ref b, SparseVec value);
    // Also sets b·a = (−1)^{|a||b|} a·b.
    void set_product_commutative(Ref a, Ref b, SparseVec value);
    void set_differential(Ref a, SparseVec value);
    FiniteCDGA build() const;

   private:
    std::map<int, std::vector<std::string>> labels_;
    std::map<std::tuple<int, std::size_t, int, std::size_t>, SparseVec> mult_;
    std::map<std::pair<int, std::size_t>, SparseVec> diff_;
    std::optional<Ref> unit_;
  };

  FiniteCDGA() = default;

  // Materializes degrees lo..hi of any graded algebra (which must vanish
  // outside that range for the result to be a subalgebra).
  static FiniteCDGA from_view(const GradedAlgebra& a, int lo, int hi);

  std::size_t dim(int n) const override;
  SparseVec differential(int n, std::size_t i) const override;
  SparseVec product(int p, std::size_t i, int q, std::size_t j) const override;
  std::string label(int n, std::size_t i) const override;
  int min_degree() const override { return lo_; }
  std::optional<int> max_degree() const override { return hi_; }
  std::optional<std::size_t> unit_index() const override;

  int top_degree() const { return hi_; }
  std::size_t total_dim() const;
  std::optional<Ref> find(std::string_view label) const;
  bool has_zero_differential() const;
  std::optional<Ref> unit() const { return unit_; }
  std::size_t product_count() const { return mult_.size(); }

 private:
  int lo_ = 0, hi_ = -1;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<SparseVec>> diff_;
  std::map<std::tuple<int, std::size_t, int, std::size_t>, SparseVec> mult_;
  std::optional<Ref> unit_;
};

using FinitePtr = std::shared_ptr<const FiniteCDGA>;

}  // namespace rht
