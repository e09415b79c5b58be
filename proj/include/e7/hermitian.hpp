#pragma once

#include <string>
#include <vector>

#include "e7/forms.hpp"

namespace e7 {

/// Diagonal γ-hermitian form <c1, ..., cn> over Q = (a, b)_F, γ the canonical
/// (symplectic) involution.
struct HermitianForm {
  Rational a;
  Rational b;
  RationalVector coeffs;

  /// Throws std::invalid_argument for a zero parameter or coefficient.
  HermitianForm(Rational a, Rational b, RationalVector coeffs);
};

/// Reduced norm of (a, b)_F: <1, -a, -b, ab>.
QuadraticForm quaternion_norm_form(const Rational& a, const Rational& b);

/// q(v) = h(v, v) as a quadratic form over F: ⊥ c_i (norm form of Q).
QuadraticForm hermitian_trace_form(const HermitianForm& h);

/// Half the Witt index of the trace form over a real-closed field. Throws
/// std::logic_error if that index is odd.
std::size_t witt_index_hermitian(const HermitianForm& h);

struct RealTableRow {
  std::string q_label;
  std::string j_label;
  std::size_t witt_index = 0;
  std::string type;
  /// False for the split-Q rows, where the index is the full 28.
  bool computed = false;
};

/// Groups of type E7 over a real-closed field from (Q, J).
std::vector<RealTableRow> e7_real_table();

}  // namespace e7
