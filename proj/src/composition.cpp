#include "e7/composition.hpp"

namespace e7 {

namespace {

struct Table {
  std::size_t dim;
  std::vector<std::size_t> index;
  RationalVector coeff;
  RationalVector norm;
};

// Doubles a table with parameter g. Basis of the double: (e_i, 0) -> i,
// (0, e_i) -> dim + i.
//   (e_i,0)(e_j,0) = (e_i e_j, 0)
//   (e_i,0)(0,e_j) = (0, e_j e_i)
//   (0,e_i)(e_j,0) = (0, e_i conj(e_j))
//   (0,e_i)(0,e_j) = (g conj(e_j) e_i, 0)
Table double_table(const Table& t, const Rational& g) {
  const std::size_t d = t.dim;
  Table out{2 * d, std::vector<std::size_t>(4 * d * d), RationalVector(4 * d * d), {}};
  auto conj_sign = [](std::size_t i) { return i == 0 ? 1 : -1; };
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    out.index[i * out.dim + j] = k;
    out.coeff[i * out.dim + j] = c;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      set(i, j, t.index[i * d + j], t.coeff[i * d + j]);
      set(i, d + j, d + t.index[j * d + i], t.coeff[j * d + i]);
      set(d + i, j, d + t.index[i * d + j], conj_sign(j) * t.coeff[i * d + j]);
      set(d + i, d + j, t.index[j * d + i], g * conj_sign(j) * t.coeff[j * d + i]);
    }
  }
  out.norm = t.norm;
  for (const auto& c : t.norm) out.norm.push_back(-g * c);
  return out;
}

}  // namespace

CompositionAlgebra::CompositionAlgebra(RationalVector parameters) : params_(std::move(parameters)) {
  if (params_.empty() || params_.size() > 3)
    throw std::invalid_argument("composition algebra needs 1 to 3 doubling parameters");
  Table t{1, {0}, {Rational(1)}, {Rational(1)}};
  for (const auto& g : params_) {
    if (g == 0) throw std::invalid_argument("doubling parameter must be nonzero");
    t = double_table(t, g);
  }
  dim_ = t.dim;
  index_ = std::move(t.index);
  coeff_ = std::move(t.coeff);
  norm_ = std::move(t.norm);
}

CompositionElement::CompositionElement(CompositionAlgebraPtr algebra, RationalVector coefficients)
    : algebra_(std::move(algebra)), coeffs_(std::move(coefficients)) {
  if (!algebra_) throw std::invalid_argument("composition element needs an algebra");
  require_same_size(coeffs_.size(), algebra_->dimension(), "composition element");
}

CompositionElement CompositionElement::unit(CompositionAlgebraPtr algebra) {
  return basis(std::move(algebra), 0);
}

CompositionElement CompositionElement::basis(CompositionAlgebraPtr algebra, std::size_t i) {
  const std::size_t d = algebra->dimension();
  return CompositionElement(std::move(algebra), basis_vector<Rational>(d, i));
}

namespace {
void require_same_algebra(const CompositionElement& x, const CompositionElement& y) {
  if (!(*x.algebra() == *y.algebra()))
    throw std::invalid_argument("elements belong to different composition algebras");
}
}  // namespace

CompositionElement operator+(const CompositionElement& a, const CompositionElement& b) {
  require_same_algebra(a, b);
  return CompositionElement(a.algebra_, a.coeffs_ + b.coeffs_);
}

CompositionElement operator-(const CompositionElement& a, const CompositionElement& b) {
  require_same_algebra(a, b);
  return CompositionElement(a.algebra_, a.coeffs_ - b.coeffs_);
}

CompositionElement multiply(const CompositionElement& x, const CompositionElement& y) {
  require_same_algebra(x, y);
  return CompositionElement(x.algebra(),
                            x.algebra()->multiply(x.coefficients(), y.coefficients()));
}

std::pair<CompositionElement, Rational> conj_trace(const CompositionElement& x) {
  const auto& alg = *x.algebra();
  return {CompositionElement(x.algebra(), alg.conj(x.coefficients())), alg.trace(x.coefficients())};
}

QuadraticForm norm_form(const CompositionAlgebra& algebra) {
  RationalVector c;
  for (std::size_t i = 0; i < algebra.dimension(); ++i) c.push_back(algebra.norm_coeff(i));
  return QuadraticForm(std::move(c));
}

}  // namespace e7
