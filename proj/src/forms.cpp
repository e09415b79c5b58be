#include "e7/forms.hpp"

#include <algorithm>

namespace e7 {

QuadraticForm::QuadraticForm(RationalVector coefficients) : coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (c == 0) throw std::invalid_argument("quadratic form coefficient must be nonzero");
}

Rational QuadraticForm::evaluate(const RationalVector& x) const {
  require_same_size(x.size(), coeffs_.size(), "quadratic form evaluation");
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += coeffs_[i] * x[i] * x[i];
  return acc;
}

QuadraticForm QuadraticForm::scaled(const Rational& c) const {
  if (c == 0) throw std::invalid_argument("scaling a quadratic form by zero");
  RationalVector out = coeffs_;
  for (auto& v : out) v *= c;
  return QuadraticForm(std::move(out));
}

QuadraticForm orthogonal_sum(const QuadraticForm& a, const QuadraticForm& b) {
  RationalVector out = a.coeffs_;
  out.insert(out.end(), b.coeffs_.begin(), b.coeffs_.end());
  return QuadraticForm(std::move(out));
}

QuadraticForm hyperbolic(std::size_t planes) {
  RationalVector c;
  for (std::size_t i = 0; i < planes; ++i) {
    c.emplace_back(1);
    c.emplace_back(-1);
  }
  return QuadraticForm(std::move(c));
}

Signature signature_and_witt(const QuadraticForm& q) {
  Signature s;
  for (const auto& c : q.coefficients()) (sgn(c) > 0 ? s.positives : s.negatives)++;
  s.witt_index = std::min(s.positives, s.negatives);
  return s;
}

QuadraticForm diagonalize(const RationalMatrix& gram) {
  if (!gram.is_square()) throw std::invalid_argument("Gram matrix must be square");
  if (gram != gram.transpose()) throw std::invalid_argument("Gram matrix is not symmetric");
  const std::size_t n = gram.rows();
  RationalMatrix g = gram;
  RationalVector diag;
  diag.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (g(k, k) == 0) {
      // Find a usable pivot: a later nonzero diagonal entry (swap), or an
      // off-diagonal entry g(k,j) (add row/column j to k, since then
      // g(k,k) becomes 2 g(k,j) + g(j,j) for one of the signs).
      std::size_t swap_with = n;
      for (std::size_t j = k + 1; j < n; ++j)
        if (g(j, j) != 0) {
          swap_with = j;
          break;
        }
      if (swap_with < n) {
        for (std::size_t i = 0; i < n; ++i) std::swap(g(k, i), g(swap_with, i));
        for (std::size_t i = 0; i < n; ++i) std::swap(g(i, k), g(i, swap_with));
      } else {
        std::size_t j = k + 1;
        while (j < n && g(k, j) == 0) ++j;
        if (j == n) throw std::domain_error("Gram matrix is singular");
        for (std::size_t i = 0; i < n; ++i) g(k, i) += g(j, i);
        for (std::size_t i = 0; i < n; ++i) g(i, k) += g(i, j);
      }
    }
    const Rational pivot = g(k, k);
    diag.push_back(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g(i, k) == 0) continue;
      const Rational f = g(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) g(i, j) -= f * g(k, j);
      for (std::size_t j = k; j < n; ++j) g(j, i) = g(i, j);
    }
  }
  return QuadraticForm(std::move(diag));
}

RationalMatrix standard_symplectic_gram(std::size_t dim) {
  if (dim % 2 != 0) throw std::invalid_argument("symplectic dimension must be even");
  const std::size_t m = dim / 2;
  RationalMatrix g(dim, dim);
  for (std::size_t i = 0; i < m; ++i) {
    g(i, i + m) = 1;
    g(i + m, i) = -1;
  }
  return g;
}

}  // namespace e7
