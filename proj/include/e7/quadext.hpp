#pragma once

#include <memory>
#include <ostream>

#include "e7/rational.hpp"

namespace e7 {

/// K = F(√a) for a non-square rational a. One square root of a is fixed
/// symbolically; ι negates its coefficient.
class QuadField {
 public:
  /// Throws std::domain_error when a is a rational square (K would not be a field).
  explicit QuadField(Rational a);
  const Rational& parameter() const { return a_; }

 private:
  Rational a_;
};

using QuadFieldPtr = std::shared_ptr<const QuadField>;
QuadFieldPtr make_quad_field(const Rational& a);

/// u + v√a. Elements with v = 0 may omit the field pointer; any element with
/// v != 0 carries it.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& u) : u_(u) {}  // NOLINT: scalars embed implicitly
  QuadExt(int u) : u_(u) {}              // NOLINT
  QuadExt(Rational u, Rational v, QuadFieldPtr field);

  static QuadExt root(const QuadFieldPtr& field) { return QuadExt(0, 1, field); }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const QuadFieldPtr& field() const { return field_; }
  bool is_rational() const { return v_ == 0; }

  QuadExt conj() const;
  /// Field norm u² - a v².
  Rational norm() const;
  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator-(const QuadExt& a) { return QuadExt(-a.u_, -a.v_, a.field_); }

  friend QuadExt operator*(const Rational& r, const QuadExt& x) {
    return QuadExt(r * x.u_, r * x.v_, x.field_);
  }
  friend QuadExt operator*(const QuadExt& x, const Rational& r) { return r * x; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

 private:
  void adopt_field(const QuadExt& o);

  Rational u_;
  Rational v_;
  QuadFieldPtr field_;
};

inline Rational conj(const Rational& r) { return r; }
inline QuadExt conj(const QuadExt& x) { return x.conj(); }

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const QuadExt& x) { return x.u() == 0 && x.v() == 0; }

}  // namespace e7
