#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "e7/albert.hpp"
#include "e7/forms.hpp"
#include "e7/poly.hpp"
#include "e7/report.hpp"
#include "e7/tensor.hpp"

namespace e7 {

enum class SystemKind { ms, albert, scaled, from_gift, custom };
std::string to_string(SystemKind k);

/// Where a triple system came from.
struct Provenance {
  SystemKind kind = SystemKind::custom;
  std::string label;
  /// Scaling factor relative to `parent_label` for scaled systems.
  Rational lambda = 1;
  std::string parent_label;
  /// For ms systems: dimension of W and the Gram matrix of s.
  std::size_t w_dim = 0;
  RationalMatrix s_gram;
  /// Odd-dimensional W: s is necessarily degenerate and so is b.
  bool formal = false;
  /// For albert systems.
  std::shared_ptr<const AlbertAlgebra> albert;
};

/// (V, b, t) with b(x, y) = x^T G y and t a sparse trilinear tensor;
/// q(x, y, z, w) = b(x, t(y, z, w)).
class TripleSystem {
 public:
  /// Throws std::invalid_argument when G is not skew or shapes disagree.
  TripleSystem(RationalMatrix b_gram, TrilinearTensor t, Provenance provenance);

  std::size_t dimension() const { return gram_.rows(); }
  const RationalMatrix& b_gram() const { return gram_; }
  bool b_nondegenerate() const { return form_.has_value(); }
  /// Throws std::domain_error for a degenerate b.
  const RationalSkewForm& b_form() const;
  const TrilinearTensor& tensor() const { return t_; }
  const Provenance& provenance() const { return provenance_; }

  template <class S>
  S b(const Vec<S>& x, const Vec<S>& y) const {
    require_same_size(x.size(), dimension(), "b");
    require_same_size(y.size(), dimension(), "b");
    S acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (gram_(i, j) != 0 && !is_zero(y[j])) acc += scale(gram_(i, j), x[i] * y[j]);
    }
    return acc;
  }
  /// The linear functional w -> b(w, x) as a coefficient vector G x.
  template <class S>
  Vec<S> b_left_functional(const Vec<S>& x) const {
    return convert_matrix<S>(gram_) * x;
  }

  template <class S>
  Vec<S> t(const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) const {
    return contract_parallel(t_, x, y, z);
  }
  template <class S>
  S q(const Vec<S>& x, const Vec<S>& y, const Vec<S>& z, const Vec<S>& w) const {
    return b(x, t(y, z, w));
  }
  template <class S>
  S quartic(const Vec<S>& x) const {
    return q(x, x, x, x);
  }

  /// Basis labels such as "alpha", "j[3]", "j'[3]", "beta".
  std::vector<std::string> basis_labels() const;

 private:
  RationalMatrix gram_;
  std::optional<RationalSkewForm> form_;
  TrilinearTensor t_;
  Provenance provenance_;
};

/// Symmetric 4-linear values on sorted index tuples, keyed by the packed
/// monomial of the tuple.
using QuarticValues = std::unordered_map<Monomial, Rational>;

/// q(e_a, e_b, e_c, e_d) for sorted a <= b <= c <= d from a homogeneous
/// quartic: coefficient times the product of multiplicity factorials over 24.
QuarticValues symmetric_quartic_values(const Poly& quartic);

/// t from q by b-duality: t(e_b, e_c, e_d) = G^{-1} (q(e_a, e_b, e_c, e_d))_a.
/// Throws std::invalid_argument for a non-homogeneous Q and std::domain_error
/// when b is degenerate.
TripleSystem build_from_quartic(const RationalMatrix& b_gram, const Poly& quartic,
                                Provenance provenance);

// ---------------------------------------------------------------- ms

/// M_s on V = F ⊕ W ⊕ W ⊕ F with
///   b(x, y) = αδ - βγ + s(j, k') + s(j', k),  det(x) = αβ - s(j, j'),
///   q(x, x, x, x) = 12 det(x)², t(x, x, x) = 6 det(x) (-α, j, -j', β).
/// Coordinates: 0 = α, 1..m = j, m+1..2m = j', 2m+1 = β.
/// For even dim W, s must be nondegenerate and t comes from q by duality. For
/// odd dim W the system is formal: b is degenerate and t is the polarized
/// closed form.
TripleSystem build_ms(const RationalMatrix& s_gram);
/// Standard s: s(e_i, e_{i+m/2}) = 1, plus a null last coordinate when m is odd.
TripleSystem build_ms(std::size_t w_dim);
RationalMatrix ms_standard_s(std::size_t w_dim);
/// t(x, y, z) = det(x,y) D(z) + det(y,z) D(x) + det(x,z) D(y) with
/// D(α, j, j', β) = (-α, j, -j', β); valid for any s.
TrilinearTensor ms_closed_form_tensor(const RationalMatrix& s_gram);

struct MsParts {
  Rational alpha;
  RationalVector j;
  RationalVector jp;
  Rational beta;
};
MsParts ms_split(const RationalVector& x, std::size_t w_dim);
RationalVector ms_join(const MsParts& parts);

struct MsDiagnostics {
  Rational det_x, det_y, wdet_x, wdet_y, det_lin;
  /// (1/8) tr(p(x⊗x) p(y⊗y)).
  Rational trace_eighth;
  /// 3 q(x,x,y,y) - b(y,x)² + (dim W - 7) det(x) det(y) - 5 det(x,y)².
  Rational trform_rhs;
  bool trform_check = false;
  /// 5 b(x,y)² + (dim W - 7) det(x) det(y) - 5 det(x,y)².
  Rational remainder;
};
/// Throws std::invalid_argument unless ts is an ms system.
MsDiagnostics ms_diagnostics(const TripleSystem& ts, const RationalVector& x,
                             const RationalVector& y);

/// The closed-form trace identity for M_s on `budget.samples` random pairs.
/// Throws std::invalid_argument unless ts is an ms system.
CheckResult check_ms_trace_form(const TripleSystem& ts, const Budget& budget);

/// The pair used to show M_s is degenerate: x = (0, e1, f1, 0), y = (0, e2, f2, 0)
/// with s(e_i, f_i) = 1 and all cross pairings zero.
std::pair<RationalVector, RationalVector> ms_structured_witness(const TripleSystem& ts);

/// ϖ(α, j, j', β) = (-β, j', j, α).
RationalVector varpi(const TripleSystem& ts, const RationalVector& x);
RationalMatrix varpi_matrix(const TripleSystem& ts);
/// f(c, u, φ)(α, j, j', β) = (cα, φ(j), αu + φ†(j'), (β + s(φ(j), u))/c),
/// φ† = σ_s(φ)^{-1}. Throws std::domain_error for singular φ or c = 0.
RationalMatrix f_map(const TripleSystem& ts, const Rational& c, const RationalVector& u,
                     const RationalMatrix& phi);
/// φ† for the s-adjoint involution.
RationalMatrix dagger(const TripleSystem& ts, const RationalMatrix& phi);
/// f(c,u,φ) f(d,v,ψ) == f(cd, du + φ†(v), φψ).
bool check_f_composition(const TripleSystem& ts, const Rational& c, const RationalVector& u,
                         const RationalMatrix& phi, const Rational& d, const RationalVector& v,
                         const RationalMatrix& psi);

// ---------------------------------------------------------------- albert

struct QuarticCoefficients {
  Rational c1, c2, c3;
  friend bool operator==(const QuarticCoefficients&, const QuarticCoefficients&) = default;
};

/// Verified coefficients of
///   q(x) = c1 (αβ - T(j, j'))² + c2 T(j♯, j'♯) + c3 (α N(j) + β N(j')).
QuarticCoefficients albert_quartic_coefficients();

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves FTS3 for (c1, c2, c3) at `points` random integer points. Throws
/// CalibrationError when there is no unique nonzero solution.
QuarticCoefficients calibrate_albert_quartic(const AlbertAlgebra& J, std::uint64_t seed,
                                             std::size_t points = 20);

/// The three quartic pieces (αβ - T(j,j'))², T(j♯,j'♯), αN(j) + βN(j').
std::array<Poly, 3> albert_quartic_terms(const AlbertAlgebra& J);
RationalMatrix albert_b_gram(const AlbertAlgebra& J);

/// M(J): b(x, y) = αδ - βγ + T(j, k') - T(j', k). Coordinates: 0 = α,
/// 1..27 = j, 28..54 = j', 55 = β.
TripleSystem build_albert(std::shared_ptr<const AlbertAlgebra> J,
                          const QuarticCoefficients& c = albert_quartic_coefficients());

// ---------------------------------------------------------------- general

/// p(u⊗v) w = t(u,v,w) - b(w,u) v - b(w,v) u, as a matrix.
template <class S>
Matrix<S> p_map(const TripleSystem& ts, const Vec<S>& u, const Vec<S>& v) {
  Matrix<S> m = partial_contraction(ts.tensor(), u, v);
  const Vec<S> gu = ts.b_left_functional(u);
  const Vec<S> gv = ts.b_left_functional(v);
  // b(w, u) = w^T G u, so the map w -> b(w,u) v is outer(v, G u).
  m -= outer(v, gu);
  m -= outer(u, gv);
  return m;
}

template <class S>
Vec<S> triple_product(const TripleSystem& ts, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
  return ts.t(x, y, z);
}

/// (V, λb, λt).
TripleSystem scale(const TripleSystem& ts, const Rational& lambda);

/// FTS1, FTS2, FTS3, FTS3', badtrid.
std::vector<CheckResult> check_axioms(const TripleSystem& ts, const Budget& budget);

struct Classification {
  bool degenerate = false;
  CheckResult evidence;
  /// tr(p(x⊗x)p(y⊗y)) - 24(q(x,x,y,y) - 2b(y,x)²) at the witness.
  std::optional<Rational> residual;
};
Classification classify(const TripleSystem& ts, const Budget& budget);

/// Residual of the trace identity at (x, y).
Rational trace_identity_residual(const TripleSystem& ts, const RationalVector& x,
                                 const RationalVector& y);

/// g preserves b and t with multiplier lambda. b is compared on all basis
/// pairs. t is compared on all basis triples when g is monomial (one nonzero
/// per column) and on `samples` random triples otherwise.
CheckResult check_similarity(const TripleSystem& ts, const RationalMatrix& g, const Rational& lambda,
                             const std::string& name, std::size_t samples = 100,
                             std::uint64_t seed = 0);

// Exhaustive identity checks modulo primes (polynomial expansion over F_p).
struct ModularCheck {
  bool ok = true;
  bool skipped = false;  // the prime divides a denominator
  std::string witness;   // human-readable location of a nonzero coefficient
};
ModularCheck exhaustive_fts3_mod_p(const TripleSystem& ts, std::uint64_t prime);
ModularCheck exhaustive_fts3_prime_mod_p(const TripleSystem& ts, std::uint64_t prime);
ModularCheck exhaustive_badtrid_mod_p(const TripleSystem& ts, std::uint64_t prime);
ModularCheck exhaustive_trace_identity_mod_p(const TripleSystem& ts, std::uint64_t prime);

/// FTS1 on all basis 4-tuples: returns the first asymmetric tuple, if any.
std::optional<std::array<std::size_t, 4>> find_fts1_violation(const TripleSystem& ts);

}  // namespace e7
