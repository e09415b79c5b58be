#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "e7/modp.hpp"

namespace e7::kernels {

using ModRow = std::vector<std::uint64_t>;
/// Sorted (column, value) pairs, values in [1, p).
using ModSparseRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

/// Rank over F_p of a dense matrix given by rows with entries in [0, p).
/// Both variants run the same elimination; the parallel one splits the row
/// updates across OpenMP threads.
std::size_t rank_mod_p_serial(std::vector<ModRow> rows, const PrimeField& field);
std::size_t rank_mod_p_parallel(std::vector<ModRow> rows, const PrimeField& field);

/// Rank over F_p of sparse rows with `cols` columns. Keeps a reduced echelon
/// basis of dense pivot rows, so the work per input row scales with its
/// support rather than with the number of rows.
std::size_t rank_mod_p_sparse_serial(const std::vector<ModSparseRow>& rows, std::size_t cols,
                                     const PrimeField& field);
std::size_t rank_mod_p_sparse_parallel(const std::vector<ModSparseRow>& rows, std::size_t cols,
                                       const PrimeField& field);

/// Number of OpenMP threads the parallel kernels will use.
int thread_count();

}  // namespace e7::kernels
