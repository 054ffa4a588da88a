#include "doctest.h"
#include "helpers.hpp"
#include "rht/kernels.hpp"

using namespace rht;

TEST_CASE("identity matrix has trivial kernel and solves everything") {
  auto id = RationalMatrix::identity(3);
  std::vector<SparseVec> targets = {{{0, Rational(1)}, {2, Rational(-5, 3)}}, {}};
  auto s = solve_linear(id, targets);
  CHECK(s.kernel.empty());
  CHECK(s.rank == 3);
  REQUIRE(s.solutions.size() == 2);
  CHECK(s.solutions[0].has_value());
  CHECK(*s.solutions[0] == targets[0]);
  CHECK(s.solutions[1].has_value());
}

TEST_CASE("zero matrix has full kernel") {
  RationalMatrix z(2, 2);
  auto s = solve_linear(z, std::vector<SparseVec>{sv::unit(1)});
  CHECK(s.kernel.size() == 2);
  CHECK(s.rank == 0);
  CHECK_FALSE(s.solutions[0].has_value());
}

TEST_CASE("random matrices satisfy rank-nullity and solution checks") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = rng() % 6 + 1, cols = rng() % 8 + 1;
    auto m = testing::random_matrix(rng, rows, cols, trial % 3 == 0 ? 0.3 : 0.7);
    std::vector<SparseVec> targets;
    for (int t = 0; t < 3; ++t) {
      std::vector<Rational> d(rows);
      for (auto& x : d) x = testing::random_rational(rng);
      targets.push_back(sv::from_dense(d));
    }
    for (auto policy : {PivotPolicy::SmallestEntry, PivotPolicy::LargestIndex}) {
      auto s = solve_linear(m, targets, {policy, Backend::Parallel});
      std::size_t oracle_rank = testing::dense_rank(testing::dense(m));
      CHECK(s.rank == oracle_rank);
      CHECK(s.rank + s.kernel.size() == cols);
      CHECK(s.image.size() == s.rank);
      for (const auto& k : s.kernel) CHECK(m.apply(k).empty());
      for (std::size_t j = 0; j < targets.size(); ++j) {
        auto aug = testing::dense(m);
        for (std::size_t r = 0; r < rows; ++r) aug[r].push_back(sv::get(targets[j], static_cast<std::uint32_t>(r)));
        bool solvable = testing::dense_rank(aug) == oracle_rank;
        CHECK(s.solutions[j].has_value() == solvable);
        if (s.solutions[j]) CHECK(m.apply(*s.solutions[j]) == targets[j]);
      }
    }
  }
}

TEST_CASE("echelon coordinates reconstruct members of the span") {
  std::mt19937 rng(5);
  Echelon e(6);
  std::vector<SparseVec> gens;
  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> d(6);
    for (auto& x : d) x = testing::random_rational(rng);
    gens.push_back(sv::from_dense(d));
    e.insert(gens.back());
  }
  SparseVec v = sv::axpy(sv::scale(gens[0], Rational(2, 3)), Rational(-7), gens[3]);
  SparseVec coords = e.coordinates(v);
  SparseVec back;
  for (const auto& [i, c] : coords) back = sv::axpy(back, c, e.rows()[i]);
  CHECK(back == v);
  CHECK(e.contains(v));
}

TEST_CASE("serial and parallel kernels agree exactly") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 6; ++trial) {
    std::size_t dim = 40 + rng() % 40;
    std::vector<SparseVec> vecs;
    for (int i = 0; i < 70; ++i) {
      std::vector<Rational> d(dim);
      std::bernoulli_distribution nz(0.15);
      for (auto& x : d)
        if (nz(rng)) x = testing::random_rational(rng, 9);
      vecs.push_back(sv::from_dense(d));
    }
    Echelon a(dim, {PivotPolicy::SmallestEntry, Backend::Serial});
    Echelon b(dim, {PivotPolicy::SmallestEntry, Backend::Parallel});
    for (const auto& v : vecs) CHECK(a.insert(v) == b.insert(v));
    CHECK(a.rows() == b.rows());
    CHECK(a.pivots() == b.pivots());
    CHECK(a.reduce_all(vecs) == b.reduce_all(vecs));

    std::vector<SparseVec> rows_s = a.rows(), rows_p = a.rows();
    SparseVec pivot = vecs[0];
    if (!pivot.empty()) {
      pivot = sv::scale(pivot, 1 / pivot.front().second);
      kernels::serial::eliminate_column(rows_s, pivot, pivot.front().first);
      kernels::parallel::eliminate_column(rows_p, pivot, pivot.front().first);
      CHECK(rows_s == rows_p);
    }
  }
}

TEST_CASE("pivot policies span the same subspace") {
  std::mt19937 rng(17);
  auto m = testing::random_matrix(rng, 7, 9, 0.5);
  Echelon a(7, {PivotPolicy::SmallestEntry, Backend::Serial});
  Echelon b(7, {PivotPolicy::LargestIndex, Backend::Serial});
  for (const auto& c : m.columns()) {
    a.insert(c);
    b.insert(c);
  }
  CHECK(a.rank() == b.rank());
  for (const auto& r : a.rows()) CHECK(b.contains(r));
}
