#include <stdexcept>

#include "doctest.h"
#include "e7/composition.hpp"

using namespace e7;

namespace {

void check_composition_laws(const CompositionAlgebra& c, std::uint64_t seed) {
  const std::size_t n = c.dimension();
  for (std::uint64_t s = 0; s < 25; ++s) {
    auto rng = sample_rng(seed, s);
    const auto x = random_rational_vector(rng, n);
    const auto y = random_rational_vector(rng, n);
    const auto xy = c.multiply(x, y);
    CHECK(c.norm(xy) == c.norm(x) * c.norm(y));
    // Alternative laws.
    CHECK(c.multiply(x, c.multiply(x, y)) == c.multiply(c.multiply(x, x), y));
    CHECK(c.multiply(c.multiply(y, x), x) == c.multiply(y, c.multiply(x, x)));
    // Conjugation is an anti-automorphism and x + conj(x) = T(x) 1.
    CHECK(c.conj(xy) == c.multiply(c.conj(y), c.conj(x)));
    RationalVector sum = x + c.conj(x);
    RationalVector expected(n, Rational(0));
    expected[0] = c.trace(x);
    CHECK(sum == expected);
    CHECK(c.multiply(x, c.conj(x))[0] == c.norm(x));
  }
}

}  // namespace

TEST_CASE("quaternions compose") {
  check_composition_laws(CompositionAlgebra::quaternions(-1, -1), 1);
  check_composition_laws(CompositionAlgebra::quaternions(Rational(2), Rational(-3, 5)), 2);
}

TEST_CASE("octonions compose") {
  check_composition_laws(CompositionAlgebra::octonions(-1, -1, -1), 3);
  check_composition_laws(CompositionAlgebra::octonions(1, 1, 1), 4);
  check_composition_laws(CompositionAlgebra::octonions(Rational(-2), Rational(3), Rational(1, 7)), 5);
}

TEST_CASE("octonions are not associative") {
  const CompositionAlgebra o = CompositionAlgebra::octonions(-1, -1, -1);
  bool found = false;
  for (std::size_t i = 0; i < 8 && !found; ++i)
    for (std::size_t j = 0; j < 8 && !found; ++j)
      for (std::size_t k = 0; k < 8 && !found; ++k) {
        const auto ei = basis_vector<Rational>(8, i), ej = basis_vector<Rational>(8, j),
                   ek = basis_vector<Rational>(8, k);
        found = o.multiply(o.multiply(ei, ej), ek) != o.multiply(ei, o.multiply(ej, ek));
      }
  CHECK(found);
}

TEST_CASE("norm forms") {
  CHECK(signature_and_witt(norm_form(CompositionAlgebra::octonions(-1, -1, -1))) == Signature{8, 0, 0});
  CHECK(signature_and_witt(norm_form(CompositionAlgebra::octonions(1, 1, 1))).witt_index == 4);
  CHECK(signature_and_witt(norm_form(CompositionAlgebra::quaternions(-1, -1))) == Signature{4, 0, 0});
}

TEST_CASE("elements") {
  const auto h = std::make_shared<const CompositionAlgebra>(CompositionAlgebra::quaternions(-1, -1));
  const auto i = CompositionElement::basis(h, 1);
  const auto j = CompositionElement::basis(h, 2);
  CHECK(multiply(i, i) == CompositionElement(h, {Rational(-1), 0, 0, 0}));
  CHECK(multiply(i, j) + multiply(j, i) == CompositionElement(h, {0, 0, 0, 0}));
  const auto [c, t] = conj_trace(i + CompositionElement::unit(h));
  CHECK(t == 2);
  CHECK(c == CompositionElement(h, {Rational(1), Rational(-1), 0, 0}));
  const auto other = std::make_shared<const CompositionAlgebra>(CompositionAlgebra::quaternions(1, 1));
  CHECK_THROWS_AS(multiply(i, CompositionElement::unit(other)), std::invalid_argument);
  CHECK_THROWS_AS(CompositionAlgebra(RationalVector{}), std::invalid_argument);
  CHECK_THROWS_AS(CompositionAlgebra({Rational(0)}), std::invalid_argument);
}
