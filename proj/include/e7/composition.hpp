#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "e7/forms.hpp"
#include "e7/matrix.hpp"

namespace e7 {

/// Composition algebra from one to three Cayley-Dickson doublings of F,
/// (a, b)(c, d) = (ac + g d̄ b, da + b c̄) with doubling parameter g.
/// Basis order follows the recursive pairs, so (a, b) gives (1, i, j, ij)
/// with i² = a, j² = b, ij = -ji.
class CompositionAlgebra {
 public:
  /// Throws std::invalid_argument unless 1..3 nonzero parameters are given.
  explicit CompositionAlgebra(RationalVector parameters);

  static CompositionAlgebra quaternions(const Rational& a, const Rational& b) {
    return CompositionAlgebra({a, b});
  }
  static CompositionAlgebra octonions(const Rational& a, const Rational& b, const Rational& c) {
    return CompositionAlgebra({a, b, c});
  }

  const RationalVector& parameters() const { return params_; }
  std::size_t dimension() const { return dim_; }

  /// e_i e_j = product_coeff(i, j) e_{product_index(i, j)}.
  std::size_t product_index(std::size_t i, std::size_t j) const { return index_[i * dim_ + j]; }
  const Rational& product_coeff(std::size_t i, std::size_t j) const { return coeff_[i * dim_ + j]; }
  /// n(x) = Σ norm_coeff(i) x_i².
  const Rational& norm_coeff(std::size_t i) const { return norm_[i]; }

  template <class R>
  Vec<R> multiply(const Vec<R>& x, const Vec<R>& y) const {
    require_same_size(x.size(), dim_, "composition product");
    require_same_size(y.size(), dim_, "composition product");
    Vec<R> out(dim_, R(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        out[product_index(i, j)] += scale(product_coeff(i, j), x[i] * y[j]);
      }
    }
    return out;
  }

  template <class R>
  Vec<R> conj(Vec<R> x) const {
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
    return x;
  }

  template <class R>
  R norm(const Vec<R>& x) const {
    R acc(0);
    for (std::size_t i = 0; i < dim_; ++i)
      if (!is_zero(x[i])) acc += scale(norm_[i], x[i] * x[i]);
    return acc;
  }

  /// n(x + y) - n(x) - n(y).
  template <class R>
  R norm_bilinear(const Vec<R>& x, const Vec<R>& y) const {
    R acc(0);
    for (std::size_t i = 0; i < dim_; ++i)
      if (!is_zero(x[i]) && !is_zero(y[i])) acc += scale(2 * norm_[i], x[i] * y[i]);
    return acc;
  }

  /// x + conj(x) as a scalar.
  template <class R>
  R trace(const Vec<R>& x) const {
    return scale(Rational(2), x[0]);
  }

  friend bool operator==(const CompositionAlgebra& a, const CompositionAlgebra& b) {
    return a.params_ == b.params_;
  }

 private:
  RationalVector params_;
  std::size_t dim_ = 1;
  std::vector<std::size_t> index_;
  RationalVector coeff_;
  RationalVector norm_;
};

using CompositionAlgebraPtr = std::shared_ptr<const CompositionAlgebra>;

/// Element with coefficients in the doubled basis of its parent algebra.
class CompositionElement {
 public:
  CompositionElement(CompositionAlgebraPtr algebra, RationalVector coefficients);
  static CompositionElement unit(CompositionAlgebraPtr algebra);
  static CompositionElement basis(CompositionAlgebraPtr algebra, std::size_t i);

  const CompositionAlgebraPtr& algebra() const { return algebra_; }
  const RationalVector& coefficients() const { return coeffs_; }
  Rational norm() const { return algebra_->norm(coeffs_); }

  friend bool operator==(const CompositionElement& a, const CompositionElement& b) {
    return *a.algebra_ == *b.algebra_ && a.coeffs_ == b.coeffs_;
  }
  friend CompositionElement operator+(const CompositionElement& a, const CompositionElement& b);
  friend CompositionElement operator-(const CompositionElement& a, const CompositionElement& b);

 private:
  CompositionAlgebraPtr algebra_;
  RationalVector coeffs_;
};

/// Throws std::invalid_argument when the parents differ.
CompositionElement multiply(const CompositionElement& x, const CompositionElement& y);
std::pair<CompositionElement, Rational> conj_trace(const CompositionElement& x);
QuadraticForm norm_form(const CompositionAlgebra& algebra);

}  // namespace e7
