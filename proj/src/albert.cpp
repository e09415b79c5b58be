#include "e7/albert.hpp"

namespace e7 {

AlbertAlgebra::AlbertAlgebra(CompositionAlgebra octonions)
    : o_(std::move(octonions)), gram_(kDim, kDim) {
  if (o_.dimension() != 8) throw std::invalid_argument("Albert algebra needs an octonion algebra");
  for (std::size_t i = 0; i < 3; ++i) gram_(i, i) = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 8; ++k)
      gram_(octonion_offset(i) + k, octonion_offset(i) + k) = 2 * o_.norm_coeff(k);
}

AlbertAlgebra AlbertAlgebra::split() { return AlbertAlgebra(CompositionAlgebra::octonions(1, 1, 1)); }

AlbertAlgebra AlbertAlgebra::division() {
  return AlbertAlgebra(CompositionAlgebra::octonions(-1, -1, -1));
}

AlbertElement::AlbertElement(AlbertAlgebraPtr algebra, RationalVector coordinates)
    : algebra_(std::move(algebra)), coords_(std::move(coordinates)) {
  if (!algebra_) throw std::invalid_argument("Albert element needs an algebra");
  require_same_size(coords_.size(), AlbertAlgebra::kDim, "Albert element");
}

AlbertElement::AlbertElement(AlbertAlgebraPtr algebra, const std::array<Rational, 3>& diagonal,
                             const std::array<RationalVector, 3>& octonions)
    : algebra_(std::move(algebra)), coords_(AlbertAlgebra::kDim) {
  if (!algebra_) throw std::invalid_argument("Albert element needs an algebra");
  for (std::size_t i = 0; i < 3; ++i) {
    coords_[i] = diagonal[i];
    require_same_size(octonions[i].size(), 8, "Albert octonion entry");
    for (std::size_t k = 0; k < 8; ++k) coords_[AlbertAlgebra::octonion_offset(i) + k] = octonions[i][k];
  }
}

AlbertElement AlbertElement::identity(AlbertAlgebraPtr algebra) {
  return AlbertElement(std::move(algebra), AlbertAlgebra::identity<Rational>());
}

CompositionElement AlbertElement::octonion(std::size_t i) const {
  auto parts = AlbertAlgebra::octonion_parts(coords_);
  return CompositionElement(std::make_shared<const CompositionAlgebra>(algebra_->octonions()),
                            parts.at(i));
}

namespace {
void require_same_algebra(const AlbertElement& x, const AlbertElement& y) {
  if (!(x.algebra()->octonions() == y.algebra()->octonions()))
    throw std::invalid_argument("elements belong to different Albert algebras");
}
}  // namespace

Rational trace_T(const AlbertElement& x, const AlbertElement& y) {
  require_same_algebra(x, y);
  return x.algebra()->trace(x.coordinates(), y.coordinates());
}

Rational norm_N(const AlbertElement& x) { return x.algebra()->norm(x.coordinates()); }

AlbertElement sharp(const AlbertElement& x) {
  return AlbertElement(x.algebra(), x.algebra()->sharp(x.coordinates()));
}

AlbertElement cross(const AlbertElement& x, const AlbertElement& y) {
  require_same_algebra(x, y);
  return AlbertElement(x.algebra(), x.algebra()->cross(x.coordinates(), y.coordinates()));
}

QuadraticForm trace_form(const AlbertAlgebra& algebra) { return diagonalize(algebra.trace_gram()); }

}  // namespace e7
