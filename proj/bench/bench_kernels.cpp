#include "rht/constructions.hpp"
#include "rht/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rht;

namespace {

std::vector<SparseVec> random_rows(std::size_t n, std::size_t dim, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution nz(density);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<SparseVec> rows(n);
  for (auto& r : rows)
    for (std::uint32_t c = 0; c < dim; ++c)
      if (nz(rng)) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (q != 0) r.push_back({c, q});
      }
  return rows;
}

// A reduced basis with pivots in the first half of the columns.
std::pair<std::vector<SparseVec>, std::vector<std::int32_t>> pivot_basis(std::size_t dim) {
  std::vector<SparseVec> rows;
  std::vector<std::int32_t> pivot_row(dim, -1);
  auto tails = random_rows(dim / 2, dim / 2, 0.3, 11);
  for (std::uint32_t p = 0; p < dim / 2; ++p) {
    SparseVec r{{p, Rational(1)}};
    for (const auto& [c, x] : tails[p]) r.push_back({static_cast<std::uint32_t>(dim / 2 + c), x});
    pivot_row[p] = static_cast<std::int32_t>(rows.size());
    rows.push_back(std::move(r));
  }
  return {rows, pivot_row};
}

template <class F>
void reduce_batch_bench(benchmark::State& state, F kernel) {
  std::size_t dim = static_cast<std::size_t>(state.range(0));
  auto [rows, pivot_row] = pivot_basis(dim);
  auto input = random_rows(dim, dim, 0.4, 3);
  for (auto _ : state) {
    auto vs = input;
    kernel(std::span<SparseVec>(vs), rows, pivot_row);
    benchmark::DoNotOptimize(vs.data());
  }
}

template <class F>
void eliminate_bench(benchmark::State& state, F kernel) {
  std::size_t dim = static_cast<std::size_t>(state.range(0));
  auto input = random_rows(dim, dim, 0.4, 5);
  SparseVec pivot{{0, Rational(1)}};
  auto tail = random_rows(1, dim, 0.5, 7);
  for (const auto& [c, x] : tail[0])
    if (c > 0) pivot.push_back({c, x});
  for (auto& r : input)
    if (r.empty() || r[0].first != 0) r.insert(r.begin(), std::make_pair(std::uint32_t{0}, Rational(2)));
  for (auto _ : state) {
    auto vs = input;
    kernel(std::span<SparseVec>(vs), pivot, 0);
    benchmark::DoNotOptimize(vs.data());
  }
}

void BM_ReduceBatchSerial(benchmark::State& s) { reduce_batch_bench(s, kernels::serial::reduce_batch); }
void BM_ReduceBatchParallel(benchmark::State& s) { reduce_batch_bench(s, kernels::parallel::reduce_batch); }
void BM_EliminateSerial(benchmark::State& s) { eliminate_bench(s, kernels::serial::eliminate_column); }
void BM_EliminateParallel(benchmark::State& s) { eliminate_bench(s, kernels::parallel::eliminate_column); }

void cohomology_bench(benchmark::State& state, Backend backend) {
  auto S = make_sullivan(tensor(cp_model(3), tensor(sphere_model(2), sphere_model(3))));
  LinalgOptions opts;
  opts.backend = backend;
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_at(*S, n, opts).dim());
}

void BM_CohomologySerial(benchmark::State& s) { cohomology_bench(s, Backend::Serial); }
void BM_CohomologyParallel(benchmark::State& s) { cohomology_bench(s, Backend::Parallel); }

void BM_ArrangementLattice(benchmark::State& state) {
  SubspaceArrangement arr;
  int n = static_cast<int>(state.range(0));
  arr.ambient = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      row[static_cast<std::size_t>(i)] = 1;
      row[static_cast<std::size_t>(j)] = -1;
      arr.subspaces.push_back({row});
    }
  for (auto _ : state) benchmark::DoNotOptimize(intersection_lattice(arr).flats.size());
}

}  // namespace

BENCHMARK(BM_ReduceBatchSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_ReduceBatchParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_EliminateSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_EliminateParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_CohomologySerial)->Arg(8)->Arg(11);
BENCHMARK(BM_CohomologyParallel)->Arg(8)->Arg(11);
BENCHMARK(BM_ArrangementLattice)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
