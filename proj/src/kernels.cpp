#include "e7/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace e7::kernels {

namespace {

// row[j] -= f * pivot[j] for j >= from.
inline void eliminate(ModRow& row, const ModRow& pivot, std::uint64_t f, std::size_t from,
                      const PrimeField& field) {
  for (std::size_t j = from; j < row.size(); ++j) {
    if (pivot[j] != 0) row[j] = field.sub(row[j], field.mul(f, pivot[j]));
  }
}

template <bool Parallel>
std::size_t dense_rank(std::vector<ModRow> rows, const PrimeField& field) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  const std::size_t n = rows.size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < n; ++c) {
    std::size_t pivot = rank;
    while (pivot < n && rows[pivot][c] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = field.inv(rows[rank][c]);
    for (std::size_t j = c; j < cols; ++j) rows[rank][j] = field.mul(rows[rank][j], inv);
    const ModRow& prow = rows[rank];
    const auto lo = static_cast<std::int64_t>(rank + 1);
    const auto hi = static_cast<std::int64_t>(n);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = lo; i < hi; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        if (row[c] != 0) eliminate(row, prow, row[c], c, field);
      }
    } else {
      for (std::int64_t i = lo; i < hi; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        if (row[c] != 0) eliminate(row, prow, row[c], c, field);
      }
    }
    ++rank;
  }
  return rank;
}

// Reduced echelon basis with dense pivot rows. Every pivot row has a 1 in its
// own pivot column and 0 in all other pivot columns, so a new row is reduced
// by one subtraction per pivot column in its (original) support.
template <bool Parallel>
std::size_t sparse_rank(const std::vector<ModSparseRow>& rows, std::size_t cols,
                        const PrimeField& field) {
  std::vector<ModRow> basis;
  std::vector<std::int64_t> pivot_of_col(cols, -1);
  ModRow work(cols, 0);
  for (const auto& sparse : rows) {
    if (sparse.empty()) continue;
    std::fill(work.begin(), work.end(), 0);
    for (const auto& [c, v] : sparse) work[c] = v;
    for (const auto& [c, v] : sparse) {
      (void)v;
      const std::int64_t p = pivot_of_col[c];
      if (p < 0 || work[c] == 0) continue;
      const std::uint64_t f = work[c];
      const ModRow& prow = basis[static_cast<std::size_t>(p)];
      if constexpr (Parallel) {
        const auto n = static_cast<std::int64_t>(cols);
#pragma omp parallel for schedule(static)
        for (std::int64_t j = 0; j < n; ++j) {
          const auto uj = static_cast<std::size_t>(j);
          if (prow[uj] != 0) work[uj] = field.sub(work[uj], field.mul(f, prow[uj]));
        }
      } else {
        eliminate(work, prow, f, 0, field);
      }
    }
    auto lead = std::find_if(work.begin(), work.end(), [](std::uint64_t v) { return v != 0; });
    if (lead == work.end()) continue;
    const auto pc = static_cast<std::size_t>(lead - work.begin());
    const std::uint64_t inv = field.inv(work[pc]);
    for (auto& v : work) v = field.mul(v, inv);
    // Clear the new pivot column from the existing basis rows.
    const auto nb = static_cast<std::int64_t>(basis.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t b = 0; b < nb; ++b) {
        auto& row = basis[static_cast<std::size_t>(b)];
        if (row[pc] != 0) eliminate(row, work, row[pc], 0, field);
      }
    } else {
      for (std::int64_t b = 0; b < nb; ++b) {
        auto& row = basis[static_cast<std::size_t>(b)];
        if (row[pc] != 0) eliminate(row, work, row[pc], 0, field);
      }
    }
    pivot_of_col[pc] = static_cast<std::int64_t>(basis.size());
    basis.push_back(work);
  }
  return basis.size();
}

}  // namespace

std::size_t rank_mod_p_serial(std::vector<ModRow> rows, const PrimeField& field) {
  return dense_rank<false>(std::move(rows), field);
}

std::size_t rank_mod_p_parallel(std::vector<ModRow> rows, const PrimeField& field) {
  return dense_rank<true>(std::move(rows), field);
}

std::size_t rank_mod_p_sparse_serial(const std::vector<ModSparseRow>& rows, std::size_t cols,
                                     const PrimeField& field) {
  return sparse_rank<false>(rows, cols, field);
}

std::size_t rank_mod_p_sparse_parallel(const std::vector<ModSparseRow>& rows, std::size_t cols,
                                       const PrimeField& field) {
  return sparse_rank<true>(rows, cols, field);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace e7::kernels
