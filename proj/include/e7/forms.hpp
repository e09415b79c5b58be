#pragma once

#include <cstddef>
#include <vector>

#include "e7/matrix.hpp"

namespace e7 {

/// Diagonal quadratic form <a1, ..., an> with nonzero coefficients.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  /// Throws std::invalid_argument on a zero coefficient.
  explicit QuadraticForm(RationalVector coefficients);

  const RationalVector& coefficients() const { return coeffs_; }
  std::size_t dimension() const { return coeffs_.size(); }
  Rational evaluate(const RationalVector& x) const;

  QuadraticForm scaled(const Rational& c) const;
  friend QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b);

 private:
  RationalVector coeffs_;
};

/// n copies of the hyperbolic plane <1, -1>.
QuadraticForm hyperbolic(std::size_t planes);

struct Signature {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t witt_index = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Real-closed interpretation: only the signs of the coefficients matter.
Signature signature_and_witt(const QuadraticForm& q);

/// Congruence-diagonalizes a symmetric Gram matrix. Throws std::domain_error
/// when the matrix is singular and std::invalid_argument when not symmetric.
QuadraticForm diagonalize(const RationalMatrix& gram);

/// Nondegenerate skew-symmetric bilinear form given by its Gram matrix,
/// b(x, y) = x^T G y.
template <class S>
class SkewForm {
 public:
  SkewForm() = default;
  /// Throws std::invalid_argument when G is not skew and std::domain_error
  /// when it is singular.
  explicit SkewForm(Matrix<S> gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw std::invalid_argument("skew form Gram matrix must be square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (gram_(i, j) != -gram_(j, i))
          throw std::invalid_argument("Gram matrix is not skew-symmetric");
    inverse_ = inverse(gram_);
  }

  std::size_t dimension() const { return gram_.rows(); }
  const Matrix<S>& gram() const { return gram_; }
  const Matrix<S>& gram_inverse() const { return inverse_; }

  S operator()(const Vec<S>& x, const Vec<S>& y) const { return dot(x, gram_ * y); }

 private:
  Matrix<S> gram_;
  Matrix<S> inverse_;
};

using RationalSkewForm = SkewForm<Rational>;

/// The unique v with b(e_i, v) = functional[i] for every basis vector e_i.
template <class S>
Vec<S> solve_against_form(const SkewForm<S>& b, const Vec<S>& functional) {
  require_same_size(functional.size(), b.dimension(), "solve_against_form");
  return b.gram_inverse() * functional;
}

/// Standard symplectic Gram matrix on F^(2m): pairs (i, i+m) with s(e_i, e_{i+m}) = 1.
RationalMatrix standard_symplectic_gram(std::size_t dim);

}  // namespace e7
