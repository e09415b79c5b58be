#include <stdexcept>

#include "doctest.h"
#include "e7/albert.hpp"

using namespace e7;

namespace {

void check_cubic_identities(const AlbertAlgebra& J, std::uint64_t seed) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto rng = sample_rng(seed, s);
    const auto x = random_rational_vector(rng, 27);
    const auto y = random_rational_vector(rng, 27);
    const auto xs = J.sharp(x);
    const Rational n = J.norm(x);
    CHECK(J.norm(xs) == n * n);
    CHECK(J.sharp(xs) == scaled(n, x));
    CHECK(J.trace(xs, x) == 3 * n);
    CHECK(J.cross(x, x) == scaled(Rational(2), xs));
    CHECK(J.cross(x, y) == J.cross(y, x));
    // N(x + y) = N(x) + T(x♯, y) + T(x, y♯) + N(y).
    CHECK(J.norm(x + y) == n + J.trace(xs, y) + J.trace(x, J.sharp(y)) + J.norm(y));
  }
  const auto e = AlbertAlgebra::identity<Rational>();
  CHECK(J.norm(e) == 1);
  CHECK(J.sharp(e) == e);
  CHECK(J.trace(e, e) == 3);
}

}  // namespace

TEST_CASE("split Albert algebra") { check_cubic_identities(AlbertAlgebra::split(), 1); }
TEST_CASE("division Albert algebra") { check_cubic_identities(AlbertAlgebra::division(), 2); }

TEST_CASE("trace forms") {
  CHECK(signature_and_witt(trace_form(AlbertAlgebra::split())) == Signature{15, 12, 12});
  CHECK(signature_and_witt(trace_form(AlbertAlgebra::division())) == Signature{27, 0, 0});
}

TEST_CASE("division algebra has no nonzero element of norm zero among samples") {
  const AlbertAlgebra J = AlbertAlgebra::division();
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto rng = sample_rng(8, s);
    // Traceless diagonal plus octonions keeps N from being trivially nonzero.
    auto x = random_rational_vector(rng, 27);
    if (x == RationalVector(27, Rational(0))) continue;
    CHECK(J.trace(x, x) > 0);
  }
}

TEST_CASE("elements and validation") {
  const auto J = std::make_shared<const AlbertAlgebra>(AlbertAlgebra::split());
  const AlbertElement one = AlbertElement::identity(J);
  CHECK(norm_N(one) == 1);
  CHECK(sharp(one) == one);
  CHECK(trace_T(one, one) == 3);
  CHECK(cross(one, one) == AlbertElement(J, scaled(Rational(2), one.coordinates())));
  const auto other = std::make_shared<const AlbertAlgebra>(AlbertAlgebra::division());
  CHECK_THROWS_AS(trace_T(one, AlbertElement::identity(other)), std::invalid_argument);
  CHECK_THROWS_AS(AlbertAlgebra(CompositionAlgebra::quaternions(-1, -1)), std::invalid_argument);
  CHECK_THROWS(AlbertElement(J, RationalVector(5)));
}
