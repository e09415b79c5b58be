#include "e7/brown.hpp"

#include "e7/rank.hpp"

namespace e7 {

RationalMatrix BrownAlgebra::conj_matrix() {
  RationalMatrix m(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) m.set_col(i, conj(basis_vector<Rational>(kDim, i)));
  return m;
}

RationalMatrix BrownAlgebra::varpi_matrix() {
  RationalMatrix m(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) m.set_col(i, varpi(basis_vector<Rational>(kDim, i)));
  return m;
}

BrownElement brown_element(std::shared_ptr<const BrownAlgebra> parent, const RationalVector& coords) {
  if (coords.size() != BrownAlgebra::kDim) throw std::invalid_argument("Brown elements have 56 coordinates");
  return {std::move(parent), BrownFlavor::split, nullptr, Vec<QuadExt>(coords.begin(), coords.end())};
}

BrownElement brown_element(std::shared_ptr<const BrownAlgebra> parent, QuadFieldPtr field,
                           Vec<QuadExt> coords) {
  if (coords.size() != BrownAlgebra::kDim) throw std::invalid_argument("Brown elements have 56 coordinates");
  if (!field) throw std::invalid_argument("field flavor needs a quadratic field");
  if (!is_descended(coords)) throw std::invalid_argument("element is not fixed by varpi ⊗ iota");
  return {std::move(parent), BrownFlavor::field, std::move(field), std::move(coords)};
}

namespace {

void require_compatible(const BrownElement& x, const BrownElement& y) {
  if (x.flavor != y.flavor) throw std::invalid_argument("Brown flavor mismatch");
  if (x.parent != y.parent && &x.parent->albert() != &y.parent->albert())
    throw std::invalid_argument("Brown elements over different Albert algebras");
  if (x.flavor == BrownFlavor::field && x.field->parameter() != y.field->parameter())
    throw std::invalid_argument("Brown elements over different quadratic fields");
}

}  // namespace

BrownElement brown_mul(const BrownElement& x, const BrownElement& y) {
  require_compatible(x, y);
  BrownElement out = x;
  out.coords = x.parent->multiply(x.coords, y.coords);
  return out;
}

BrownElement brown_conj(const BrownElement& x) {
  BrownElement out = x;
  out.coords = BrownAlgebra::conj(x.coords);
  return out;
}

BrownElement brown_varpi(const BrownElement& x) {
  BrownElement out = x;
  out.coords = BrownAlgebra::varpi(x.coords);
  return out;
}

bool is_descended(const Vec<QuadExt>& x) { return BrownAlgebra::varpi(conj(x)) == x; }

std::vector<Vec<QuadExt>> brown_descend(const Rational& a) {
  const QuadFieldPtr field = make_quad_field(a);
  constexpr std::size_t n = BrownAlgebra::kDim;
  const QuadExt root = QuadExt::root(field);
  // v + (ϖ ⊗ ι)(v) for v in {e_i, √a e_i} spans the fixed space; keep an
  // F-independent subset, tested on the 112 rational coordinates.
  std::vector<Vec<QuadExt>> basis;
  SparseEchelon echelon;
  for (std::size_t i = 0; i < n; ++i)
    for (const QuadExt& lambda : {QuadExt(1), root}) {
      Vec<QuadExt> v(n, QuadExt(0));
      v[i] = lambda;
      Vec<QuadExt> fixed = v + BrownAlgebra::varpi(conj(v));
      RationalVector flat(2 * n);
      for (std::size_t k = 0; k < n; ++k) {
        flat[k] = fixed[k].u();
        flat[n + k] = fixed[k].v();
      }
      if (echelon.insert(sparse_from_dense(flat))) basis.push_back(std::move(fixed));
    }
  return basis;
}

Vec<QuadExt> brown_s0(const QuadFieldPtr& field) {
  Vec<QuadExt> s(BrownAlgebra::kDim, QuadExt(0));
  s[BrownAlgebra::kAlpha] = QuadExt::root(field);
  s[BrownAlgebra::kBeta] = -QuadExt::root(field);
  return s;
}

}  // namespace e7
