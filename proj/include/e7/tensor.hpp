#pragma once

#include <omp.h>

#include <cstdint>
#include <vector>

#include "e7/matrix.hpp"
#include "e7/modp.hpp"

namespace e7 {

/// One nonzero coefficient: t(e_a, e_b, e_c) has `value` in coordinate `out`.
struct TensorEntry {
  std::uint16_t a, b, c, out;
  Rational value;
};

/// Sparse trilinear map F^n x F^n x F^n -> F^n stored on ordered index
/// triples, grouped by (a, b) for fast contraction.
class TrilinearTensor {
 public:
  TrilinearTensor() = default;
  /// Duplicate (a, b, c, out) entries are summed; zeros are dropped.
  TrilinearTensor(std::size_t n, std::vector<TensorEntry> entries);

  std::size_t dimension() const { return n_; }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::vector<TensorEntry>& entries() const { return entries_; }

  /// Entries with first two indices (a, b), as a half-open index range.
  std::pair<std::size_t, std::size_t> range(std::size_t a, std::size_t b) const {
    const std::size_t k = a * n_ + b;
    return {offsets_[k], offsets_[k + 1]};
  }

  /// Scales every value by c.
  TrilinearTensor scaled(const Rational& c) const;

  /// Sparse t(e_a, e_b, e_c) as (coordinate, value) pairs.
  std::vector<std::pair<std::size_t, Rational>> basis_value(std::size_t a, std::size_t b,
                                                            std::size_t c) const;

 private:
  std::size_t n_ = 0;
  std::vector<TensorEntry> entries_;
  std::vector<std::size_t> offsets_;
};

/// Reference contraction t(x, y, z).
template <class S>
Vec<S> contract_serial(const TrilinearTensor& t, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
  const std::size_t n = t.dimension();
  require_same_size(x.size(), n, "tensor contraction");
  require_same_size(y.size(), n, "tensor contraction");
  require_same_size(z.size(), n, "tensor contraction");
  Vec<S> out(n, S(0));
  const auto& e = t.entries();
  for (std::size_t a = 0; a < n; ++a) {
    if (is_zero(x[a])) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(y[b])) continue;
      auto [lo, hi] = t.range(a, b);
      if (lo == hi) continue;
      const S xy = x[a] * y[b];
      for (std::size_t k = lo; k < hi; ++k) {
        if (is_zero(z[e[k].c])) continue;
        out[e[k].out] += scale(e[k].value, xy * z[e[k].c]);
      }
    }
  }
  return out;
}

/// Same result as contract_serial; splits the first index across threads.
template <class S>
Vec<S> contract_parallel(const TrilinearTensor& t, const Vec<S>& x, const Vec<S>& y,
                         const Vec<S>& z) {
  const std::size_t n = t.dimension();
  require_same_size(x.size(), n, "tensor contraction");
  require_same_size(y.size(), n, "tensor contraction");
  require_same_size(z.size(), n, "tensor contraction");
  const int threads = omp_get_max_threads();
  if (threads <= 1) return contract_serial(t, x, y, z);
  std::vector<Vec<S>> partial(static_cast<std::size_t>(threads), Vec<S>(n, S(0)));
  const auto& e = t.entries();
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ia = 0; ia < static_cast<std::int64_t>(n); ++ia) {
    const auto a = static_cast<std::size_t>(ia);
    if (is_zero(x[a])) continue;
    Vec<S>& out = partial[static_cast<std::size_t>(omp_get_thread_num())];
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(y[b])) continue;
      auto [lo, hi] = t.range(a, b);
      if (lo == hi) continue;
      const S xy = x[a] * y[b];
      for (std::size_t k = lo; k < hi; ++k) {
        if (is_zero(z[e[k].c])) continue;
        out[e[k].out] += scale(e[k].value, xy * z[e[k].c]);
      }
    }
  }
  Vec<S> out(n, S(0));
  for (const auto& p : partial)
    for (std::size_t i = 0; i < n; ++i) out[i] += p[i];
  return out;
}

/// The matrix of w -> t(x, y, w).
template <class S>
Matrix<S> partial_contraction(const TrilinearTensor& t, const Vec<S>& x, const Vec<S>& y) {
  const std::size_t n = t.dimension();
  require_same_size(x.size(), n, "tensor contraction");
  require_same_size(y.size(), n, "tensor contraction");
  Matrix<S> m(n, n);
  const auto& e = t.entries();
  for (std::size_t a = 0; a < n; ++a) {
    if (is_zero(x[a])) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(y[b])) continue;
      auto [lo, hi] = t.range(a, b);
      if (lo == hi) continue;
      const S xy = x[a] * y[b];
      for (std::size_t k = lo; k < hi; ++k) m(e[k].out, e[k].c) += scale(e[k].value, xy);
    }
  }
  return m;
}

/// Values of a tensor reduced mod p; nullopt when p divides a denominator.
struct ModTensorEntry {
  std::uint16_t a, b, c, out;
  std::uint64_t value;
};
std::optional<std::vector<ModTensorEntry>> reduce_tensor(const TrilinearTensor& t,
                                                         const PrimeField& field);

}  // namespace e7
