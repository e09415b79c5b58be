#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "e7/matrix.hpp"
#include "e7/modp.hpp"

namespace e7 {

/// Sorted (column, value) pairs with nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow sparse_from_dense(const RationalVector& v);

/// Incremental row echelon form over Q. Rows are reduced by leading column
/// only, so sparse inputs stay sparse.
class SparseEchelon {
 public:
  /// Adds the row to the span; returns true when it was independent.
  bool insert(SparseRow row);
  bool contains(SparseRow row) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  SparseRow reduce(SparseRow row) const;
  std::map<std::size_t, SparseRow> pivots_;  // leading column -> row with leading 1
};

std::size_t exact_rank(const RationalMatrix& m);
std::size_t exact_rank_sparse(const std::vector<SparseRow>& rows);

/// Basis of {x : m x = 0}, one vector per free column (reduced echelon).
std::vector<RationalVector> nullspace(const RationalMatrix& m);

struct NullspaceBasis {
  std::vector<RationalVector> vectors;
  /// vectors[k] has a 1 in free_columns[k] and 0 in the other free columns.
  std::vector<std::size_t> free_columns;
};
NullspaceBasis nullspace_basis(const RationalMatrix& m);

enum class RankMode { exact, modular };

struct RankReport {
  RankMode mode = RankMode::exact;
  std::size_t rank = 0;
  std::vector<std::uint64_t> primes_used;
  std::vector<std::size_t> per_prime_rank;
  /// Primes that divide some denominator; they were not used.
  std::vector<std::uint64_t> primes_skipped;
};

/// Exact: rank over Q. Modular: max over the given primes of the rank over
/// F_p, which is a lower bound for the rational rank.
RankReport rank(const RationalMatrix& m, RankMode mode,
                const std::vector<std::uint64_t>& primes = {});

/// Reduces every entry mod p; nullopt when p divides a denominator.
std::optional<std::vector<std::vector<std::uint64_t>>> reduce_matrix(const RationalMatrix& m,
                                                                     const PrimeField& field);

}  // namespace e7
