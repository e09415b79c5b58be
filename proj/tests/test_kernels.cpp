// The OpenMP kernels against their serial references.
#include <memory>

#include "doctest.h"
#include "e7/fts.hpp"
#include "e7/gift.hpp"
#include "e7/kernels.hpp"
#include "e7/modp.hpp"

using namespace e7;

namespace {

std::vector<kernels::ModRow> random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                         const PrimeField& f, std::size_t rank_bound) {
  std::vector<kernels::ModRow> basis(rank_bound, kernels::ModRow(cols));
  for (auto& r : basis)
    for (auto& v : r) v = rng() % f.prime();
  std::vector<kernels::ModRow> out(rows, kernels::ModRow(cols, 0));
  for (auto& r : out)
    for (const auto& b : basis) {
      const std::uint64_t c = rng() % 3;
      for (std::size_t j = 0; j < cols; ++j) r[j] = f.add(r[j], f.mul(c, b[j]));
    }
  return out;
}

}  // namespace

TEST_CASE("dense modular rank: parallel matches serial") {
  const PrimeField f(random_primes(1, 4)[0]);
  std::mt19937_64 rng(17);
  for (std::size_t bound : {0u, 3u, 20u, 40u}) {
    const auto rows = random_rows(rng, 40, 50, f, bound);
    const std::size_t serial = kernels::rank_mod_p_serial(rows, f);
    CHECK(serial == bound);
    CHECK(kernels::rank_mod_p_parallel(rows, f) == serial);
  }
}

TEST_CASE("sparse modular rank: parallel matches serial") {
  const PrimeField f(random_primes(1, 5)[0]);
  std::mt19937_64 rng(3);
  std::vector<kernels::ModSparseRow> rows;
  for (std::size_t i = 0; i < 300; ++i) {
    kernels::ModSparseRow row;
    for (std::uint32_t c = 0; c < 200; ++c)
      if (rng() % 40 == 0) row.emplace_back(c, 1 + rng() % (f.prime() - 1));
    rows.push_back(std::move(row));
  }
  // Duplicate rows must not raise the rank.
  for (std::size_t i = 0; i < 50; ++i) rows.push_back(rows[i]);
  const std::size_t serial = kernels::rank_mod_p_sparse_serial(rows, 200, f);
  CHECK(kernels::rank_mod_p_sparse_parallel(rows, 200, f) == serial);
  CHECK(serial <= 200);
}

TEST_CASE("tensor contraction: parallel matches serial") {
  const TripleSystem ts = build_albert(std::make_shared<const AlbertAlgebra>(AlbertAlgebra::split()));
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto rng = sample_rng(21, s);
    const auto x = random_rational_vector(rng, 56);
    const auto y = random_rational_vector(rng, 56);
    const auto z = random_rational_vector(rng, 56);
    CHECK(contract_parallel(ts.tensor(), x, y, z) == contract_serial(ts.tensor(), x, y, z));
  }
}

TEST_CASE("pi columns and pi rank: parallel matches serial") {
  const Gift g = end_of(build_albert(std::make_shared<const AlbertAlgebra>(AlbertAlgebra::split())));
  const auto& parallel = g.pi_columns();
  const auto serial = g.pi_columns_serial();
  REQUIRE(parallel.size() == serial.size());
  CHECK(parallel == serial);
  const auto primes = random_primes(1, 8);
  CHECK(pi_rank(g, primes, true).rank == pi_rank(g, primes, false).rank);
}

TEST_CASE("thread count is positive") { CHECK(kernels::thread_count() >= 1); }
