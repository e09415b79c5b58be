// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the
// thread count; on a single core the two should be close.
#include <benchmark/benchmark.h>

#include <memory>

#include "e7/fts.hpp"
#include "e7/gift.hpp"
#include "e7/kernels.hpp"
#include "e7/modp.hpp"

using namespace e7;

namespace {

const TripleSystem& albert_split() {
  static const TripleSystem ts =
      build_albert(std::make_shared<const AlbertAlgebra>(AlbertAlgebra::split()));
  return ts;
}

std::vector<kernels::ModRow> dense_rows(std::size_t n, const PrimeField& f) {
  std::mt19937_64 rng(1);
  std::vector<kernels::ModRow> rows(n, kernels::ModRow(n));
  for (auto& r : rows)
    for (auto& v : r) v = rng() % f.prime();
  return rows;
}

/// Rows of π: one sparse row per basis matrix E_cd.
std::vector<kernels::ModSparseRow> pi_rows(const PrimeField& f) {
  const Gift g = end_of(albert_split());
  std::vector<kernels::ModSparseRow> rows;
  for (const auto& col : g.pi_columns()) {
    kernels::ModSparseRow row;
    for (const auto& [idx, v] : col) row.emplace_back(idx, *f.reduce(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

void BM_dense_rank_serial(benchmark::State& state) {
  const PrimeField f(random_primes(1, 0)[0]);
  const auto rows = dense_rows(static_cast<std::size_t>(state.range(0)), f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_mod_p_serial(rows, f));
}
void BM_dense_rank_parallel(benchmark::State& state) {
  const PrimeField f(random_primes(1, 0)[0]);
  const auto rows = dense_rows(static_cast<std::size_t>(state.range(0)), f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_mod_p_parallel(rows, f));
}
BENCHMARK(BM_dense_rank_serial)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dense_rank_parallel)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_pi_rank_serial(benchmark::State& state) {
  const PrimeField f(random_primes(1, 0)[0]);
  const auto rows = pi_rows(f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_mod_p_sparse_serial(rows, 56 * 56, f));
}
void BM_pi_rank_parallel(benchmark::State& state) {
  const PrimeField f(random_primes(1, 0)[0]);
  const auto rows = pi_rows(f);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_mod_p_sparse_parallel(rows, 56 * 56, f));
}
BENCHMARK(BM_pi_rank_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pi_rank_parallel)->Unit(benchmark::kMillisecond);

void BM_contract_serial(benchmark::State& state) {
  auto rng = sample_rng(3, 0);
  const auto x = random_rational_vector(rng, 56), y = random_rational_vector(rng, 56),
             z = random_rational_vector(rng, 56);
  for (auto _ : state) benchmark::DoNotOptimize(contract_serial(albert_split().tensor(), x, y, z));
}
void BM_contract_parallel(benchmark::State& state) {
  auto rng = sample_rng(3, 0);
  const auto x = random_rational_vector(rng, 56), y = random_rational_vector(rng, 56),
             z = random_rational_vector(rng, 56);
  for (auto _ : state) benchmark::DoNotOptimize(contract_parallel(albert_split().tensor(), x, y, z));
}
BENCHMARK(BM_contract_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_contract_parallel)->Unit(benchmark::kMillisecond);

void BM_pi_columns_serial(benchmark::State& state) {
  const Gift g = end_of(albert_split());
  for (auto _ : state) benchmark::DoNotOptimize(g.pi_columns_serial());
}
void BM_pi_columns_parallel(benchmark::State& state) {
  for (auto _ : state) {
    // A fresh gift each time so the call_once cache is cold.
    const Gift g = end_of(albert_split());
    benchmark::DoNotOptimize(g.pi_columns());
  }
}
BENCHMARK(BM_pi_columns_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pi_columns_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
