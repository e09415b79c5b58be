#pragma once

#include <array>
#include <memory>

#include "e7/composition.hpp"
#include "e7/forms.hpp"

namespace e7 {

/// H3(O) for an octonion algebra O. Coordinates of x are
///   (α1, α2, α3, o1[8], o2[8], o3[8])
/// for the hermitian matrix [[α1, o3, ō2], [ō3, α2, o1], [o2, ō1, α3]].
///
/// T(x, y) = Σ αi βi + Σ n(oi, pi)          (n(·,·) the polar of the norm)
/// N(x)    = α1 α2 α3 - Σ αi n(oi) + tr((o1 o2) o3)
/// x♯      = (α2α3 - n(o1), α3α1 - n(o2), α1α2 - n(o3),
///            conj(o2 o3) - α1 o1, conj(o3 o1) - α2 o2, conj(o1 o2) - α3 o3)
/// With these conventions (x♯)♯ = N(x) x and T(x♯, y) is the derivative of N.
class AlbertAlgebra {
 public:
  static constexpr std::size_t kDim = 27;

  /// Throws std::invalid_argument unless O is 8-dimensional.
  explicit AlbertAlgebra(CompositionAlgebra octonions);
  /// H3 of the split octonions (1, 1, 1).
  static AlbertAlgebra split();
  /// H3 of the octonions (-1, -1, -1).
  static AlbertAlgebra division();

  const CompositionAlgebra& octonions() const { return o_; }

  static constexpr std::size_t alpha_index(std::size_t i) { return i; }
  static constexpr std::size_t octonion_offset(std::size_t i) { return 3 + 8 * i; }

  template <class R>
  static std::array<Vec<R>, 3> octonion_parts(const Vec<R>& x) {
    std::array<Vec<R>, 3> parts;
    for (std::size_t i = 0; i < 3; ++i)
      parts[i] = Vec<R>(x.begin() + static_cast<std::ptrdiff_t>(octonion_offset(i)),
                        x.begin() + static_cast<std::ptrdiff_t>(octonion_offset(i) + 8));
    return parts;
  }

  template <class R>
  static Vec<R> identity() {
    Vec<R> x(kDim, R(0));
    for (std::size_t i = 0; i < 3; ++i) x[i] = R(1);
    return x;
  }

  template <class R>
  R trace(const Vec<R>& x, const Vec<R>& y) const {
    check(x);
    check(y);
    R acc(0);
    for (std::size_t i = 0; i < 3; ++i)
      if (!is_zero(x[i]) && !is_zero(y[i])) acc += x[i] * y[i];
    const auto ox = octonion_parts(x);
    const auto oy = octonion_parts(y);
    for (std::size_t i = 0; i < 3; ++i) acc += o_.norm_bilinear(ox[i], oy[i]);
    return acc;
  }

  template <class R>
  R norm(const Vec<R>& x) const {
    check(x);
    const auto o = octonion_parts(x);
    R acc = x[0] * x[1] * x[2];
    for (std::size_t i = 0; i < 3; ++i) acc -= x[i] * o_.norm(o[i]);
    acc += o_.trace(o_.multiply(o_.multiply(o[0], o[1]), o[2]));
    return acc;
  }

  template <class R>
  Vec<R> sharp(const Vec<R>& x) const {
    check(x);
    const auto o = octonion_parts(x);
    Vec<R> out(kDim, R(0));
    out[0] = x[1] * x[2] - o_.norm(o[0]);
    out[1] = x[2] * x[0] - o_.norm(o[1]);
    out[2] = x[0] * x[1] - o_.norm(o[2]);
    for (std::size_t i = 0; i < 3; ++i) {
      const Vec<R> prod = o_.conj(o_.multiply(o[(i + 1) % 3], o[(i + 2) % 3]));
      for (std::size_t k = 0; k < 8; ++k) {
        R v = prod[k];
        if (!is_zero(x[i]) && !is_zero(o[i][k])) v -= x[i] * o[i][k];
        out[octonion_offset(i) + k] = v;
      }
    }
    return out;
  }

  /// x × y = (x + y)♯ - x♯ - y♯.
  template <class R>
  Vec<R> cross(const Vec<R>& x, const Vec<R>& y) const {
    check(x);
    check(y);
    const auto ox = octonion_parts(x);
    const auto oy = octonion_parts(y);
    Vec<R> out(kDim, R(0));
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t a = (i + 1) % 3;
      const std::size_t b = (i + 2) % 3;
      out[i] = x[a] * y[b] + y[a] * x[b] - o_.norm_bilinear(ox[i], oy[i]);
      const Vec<R> prod = o_.conj(o_.multiply(ox[a], oy[b]) + o_.multiply(oy[a], ox[b]));
      for (std::size_t k = 0; k < 8; ++k) {
        R v = prod[k];
        if (!is_zero(x[i]) && !is_zero(oy[i][k])) v -= x[i] * oy[i][k];
        if (!is_zero(y[i]) && !is_zero(ox[i][k])) v -= y[i] * ox[i][k];
        out[octonion_offset(i) + k] = v;
      }
    }
    return out;
  }

  /// Gram matrix of T in the coordinate basis.
  const RationalMatrix& trace_gram() const { return gram_; }

 private:
  template <class R>
  static void check(const Vec<R>& x) {
    require_same_size(x.size(), kDim, "Albert element");
  }

  CompositionAlgebra o_;
  RationalMatrix gram_;
};

using AlbertAlgebraPtr = std::shared_ptr<const AlbertAlgebra>;

/// Element of a specific Albert algebra.
class AlbertElement {
 public:
  AlbertElement(AlbertAlgebraPtr algebra, RationalVector coordinates);
  AlbertElement(AlbertAlgebraPtr algebra, const std::array<Rational, 3>& diagonal,
                const std::array<RationalVector, 3>& octonions);
  static AlbertElement identity(AlbertAlgebraPtr algebra);

  const AlbertAlgebraPtr& algebra() const { return algebra_; }
  const RationalVector& coordinates() const { return coords_; }
  const Rational& diagonal(std::size_t i) const { return coords_.at(i); }
  CompositionElement octonion(std::size_t i) const;

  friend bool operator==(const AlbertElement& a, const AlbertElement& b) {
    return a.coords_ == b.coords_;
  }

 private:
  AlbertAlgebraPtr algebra_;
  RationalVector coords_;
};

/// Throw std::invalid_argument when the parents differ.
Rational trace_T(const AlbertElement& x, const AlbertElement& y);
Rational norm_N(const AlbertElement& x);
AlbertElement sharp(const AlbertElement& x);
AlbertElement cross(const AlbertElement& x, const AlbertElement& y);
QuadraticForm trace_form(const AlbertAlgebra& algebra);

}  // namespace e7
