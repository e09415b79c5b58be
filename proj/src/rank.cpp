#include "e7/rank.hpp"

#include <algorithm>

#include "e7/kernels.hpp"

namespace e7 {

SparseRow sparse_from_dense(const RationalVector& v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) row.emplace_back(i, v[i]);
  }
  return row;
}

namespace {

// row - c * pivot, both sorted by column.
SparseRow subtract_multiple(const SparseRow& row, const Rational& c, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -c * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - c * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow SparseEchelon::reduce(SparseRow row) const {
  std::size_t cursor = 0;
  while (cursor < row.size()) {
    auto it = pivots_.find(row[cursor].first);
    if (it == pivots_.end()) {
      ++cursor;
      continue;
    }
    Rational c = row[cursor].second;
    row = subtract_multiple(row, c, it->second);
  }
  return row;
}

bool SparseEchelon::insert(SparseRow row) {
  // Only the leading entry must be pivot-free for echelon form.
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    Rational c = row.front().second;
    row = subtract_multiple(row, c, it->second);
  }
  if (row.empty()) return false;
  Rational lead = row.front().second;
  for (auto& [col, v] : row) v /= lead;
  std::size_t key = row.front().first;
  pivots_.emplace(key, std::move(row));
  return true;
}

bool SparseEchelon::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

std::size_t exact_rank_sparse(const std::vector<SparseRow>& rows) {
  SparseEchelon ech;
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

std::size_t exact_rank(const RationalMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(sparse_from_dense(m.row(i)));
  return exact_rank_sparse(rows);
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) { return nullspace_basis(m).vectors; }

NullspaceBasis nullspace_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  NullspaceBasis basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.vectors.push_back(std::move(v));
    basis.free_columns.push_back(free);
  }
  return basis;
}

std::optional<std::vector<std::vector<std::uint64_t>>> reduce_matrix(const RationalMatrix& m,
                                                                     const PrimeField& field) {
  std::vector<std::vector<std::uint64_t>> out(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      auto v = field.reduce(m(i, j));
      if (!v) return std::nullopt;
      out[i][j] = *v;
    }
  }
  return out;
}

RankReport rank(const RationalMatrix& m, RankMode mode, const std::vector<std::uint64_t>& primes) {
  RankReport report;
  report.mode = mode;
  if (mode == RankMode::exact) {
    report.rank = exact_rank(m);
    return report;
  }
  for (std::uint64_t p : primes) {
    PrimeField field(p);
    auto reduced = reduce_matrix(m, field);
    if (!reduced) {
      report.primes_skipped.push_back(p);
      continue;
    }
    std::size_t r = kernels::rank_mod_p_parallel(std::move(*reduced), field);
    report.primes_used.push_back(p);
    report.per_prime_rank.push_back(r);
    report.rank = std::max(report.rank, r);
  }
  return report;
}

}  // namespace e7
