#include "e7/hermitian.hpp"

#include <stdexcept>

#include "e7/albert.hpp"

namespace e7 {

HermitianForm::HermitianForm(Rational a_, Rational b_, RationalVector coeffs_)
    : a(std::move(a_)), b(std::move(b_)), coeffs(std::move(coeffs_)) {
  if (a == 0 || b == 0) throw std::invalid_argument("quaternion parameters must be nonzero");
  for (const auto& c : coeffs)
    if (c == 0) throw std::invalid_argument("hermitian coefficients must be nonzero");
}

QuadraticForm quaternion_norm_form(const Rational& a, const Rational& b) {
  return QuadraticForm({Rational(1), Rational(-a), Rational(-b), Rational(a * b)});
}

QuadraticForm hermitian_trace_form(const HermitianForm& h) {
  const QuadraticForm norm = quaternion_norm_form(h.a, h.b);
  QuadraticForm out;
  for (const auto& c : h.coeffs) out = orthogonal_sum(out, norm.scaled(c));
  return out;
}

std::size_t witt_index_hermitian(const HermitianForm& h) {
  const std::size_t w = signature_and_witt(hermitian_trace_form(h)).witt_index;
  if (w % 2 != 0) throw std::logic_error("trace form has odd Witt index");
  return w / 2;
}

namespace {

/// <1> ⊥ T for the trace form T of J.
RationalVector one_plus_trace(const AlbertAlgebra& J) {
  RationalVector coeffs{Rational(1)};
  const QuadraticForm form = trace_form(J);
  const auto& t = form.coefficients();
  coeffs.insert(coeffs.end(), t.begin(), t.end());
  return coeffs;
}

}  // namespace

std::vector<RealTableRow> e7_real_table() {
  const AlbertAlgebra split = AlbertAlgebra::split();
  const AlbertAlgebra compact = AlbertAlgebra::division();
  // σ is hyperbolic whenever Q is split, so those rows have full index 28.
  std::vector<RealTableRow> rows;
  rows.push_back({"M2(R)", "J^d", 28, "E⁰₇,₇", false});
  rows.push_back({"M2(R)", "H3(O,1)", 28, "E²⁸₇,₃", false});
  rows.push_back({"H", "J^d", witt_index_hermitian(HermitianForm(-1, -1, one_plus_trace(split))),
                  "E⁹₇,₄", true});
  rows.push_back({"H", "H3(O,1)",
                  witt_index_hermitian(HermitianForm(-1, -1, one_plus_trace(compact))), "E¹³³₇,₀",
                  true});
  return rows;
}

}  // namespace e7
