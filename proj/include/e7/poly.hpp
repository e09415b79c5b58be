#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "e7/rational.hpp"

namespace e7 {

/// Monomial of degree <= 4 in variables 0..254, packed one byte per variable
/// (index + 1), ascending from the low byte. 0 is the constant monomial.
using Monomial = std::uint32_t;

constexpr std::size_t kMaxMonomialDegree = 4;

std::size_t monomial_degree(Monomial m);
std::vector<std::size_t> monomial_variables(Monomial m);
Monomial make_monomial(std::vector<std::size_t> vars);
/// Throws std::overflow_error past degree 4.
Monomial monomial_product(Monomial a, Monomial b);
/// Number of distinct orderings of the monomial's variable multiset.
std::size_t monomial_orderings(Monomial m);

/// Sparse polynomial over Q with degree at most 4.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants embed implicitly
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT

  static Poly variable(std::size_t index);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True when every term has the given degree.
  bool is_homogeneous(std::size_t degree) const;

  Rational evaluate(const RationalVector& point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void add_term(Monomial m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline Poly scale(const Rational& r, const Poly& p) { return r * p; }

/// Vector of independent variables offset, offset+1, ..., offset+n-1.
std::vector<Poly> poly_variables(std::size_t n, std::size_t offset = 0);

/// Distinct rational roots of Σ coeffs[k] r^k (coefficients low to high).
/// Throws std::invalid_argument for the zero polynomial.
std::vector<Rational> rational_roots(const RationalVector& coeffs);

}  // namespace e7
