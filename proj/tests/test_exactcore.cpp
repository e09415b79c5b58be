#include <stdexcept>

#include "doctest.h"
#include "e7/forms.hpp"
#include "e7/modp.hpp"
#include "e7/poly.hpp"
#include "e7/quadext.hpp"
#include "e7/rank.hpp"

using namespace e7;

TEST_CASE("rationals parse and print as reduced fractions") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(to_fraction_string(Rational(-10, 4)) == "-5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto rng = sample_rng(9, s);
    const Rational r = random_rational(rng);
    CHECK(parse_rational(to_fraction_string(r)) == r);
  }
}

TEST_CASE("rational squares") {
  CHECK(is_rational_square(Rational(9, 4)));
  CHECK(is_rational_square(Rational(0)));
  CHECK_FALSE(is_rational_square(Rational(2)));
  CHECK_FALSE(is_rational_square(Rational(-1)));
}

TEST_CASE("sample streams do not depend on order") {
  auto a = sample_rng(5, 3);
  auto b = sample_rng(5, 3);
  CHECK(a() == b());
  auto c = sample_rng(5, 4);
  auto d = sample_rng(5, 3);
  CHECK(c() != d());
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadFieldPtr k = make_quad_field(Rational(-3));
  const QuadExt r = QuadExt::root(k);
  CHECK(r * r == QuadExt(Rational(-3)));
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto rng = sample_rng(1, s);
    const QuadExt x = QuadExt(random_nonzero_rational(rng)) + random_rational(rng) * r;
    const QuadExt y = QuadExt(random_rational(rng)) + random_nonzero_rational(rng) * r;
    CHECK(x * x.inverse() == QuadExt(1));
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(conj(x * y) == conj(x) * conj(y));
    CHECK((x * conj(x)).is_rational());
  }
  CHECK_THROWS_AS(make_quad_field(Rational(4, 9)), std::domain_error);
}

TEST_CASE("prime field and random primes") {
  const auto primes = random_primes(4, 11);
  REQUIRE(primes.size() == 4);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    CHECK(primes[i] >= (1ull << 61));
    CHECK(primes[i] < (1ull << 62));
    for (std::size_t j = 0; j < i; ++j) CHECK(primes[i] != primes[j]);
  }
  CHECK(random_primes(4, 11) == primes);
  const PrimeField f(primes[0]);
  for (std::uint64_t a : {2ull, 3ull, 123456789ull}) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(Rational(1, 2)).value() == f.inv(2));
  CHECK_FALSE(PrimeField(7).reduce(Rational(1, 7)).has_value());
}

TEST_CASE("exact and modular rank agree on random integer matrices") {
  const auto primes = random_primes(2, 3);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto rng = sample_rng(2, s);
    RationalMatrix m(7, 9);
    // Rank at most 5: product of 7x5 and 5x9 factors.
    RationalMatrix a(7, 5), b(5, 9);
    for (auto& v : a.data()) v = random_rational(rng, 3, 1);
    for (auto& v : b.data()) v = random_rational(rng, 3, 1);
    m = a * b;
    const std::size_t exact = exact_rank(m);
    CHECK(exact <= 5);
    CHECK(rank(m, RankMode::modular, primes).rank == exact);
    const NullspaceBasis ns = nullspace_basis(m);
    CHECK(ns.vectors.size() == 9 - exact);
    CHECK(ns.free_columns.size() == ns.vectors.size());
    for (const auto& v : ns.vectors) {
      const RationalVector image = m * v;
      for (const auto& e : image) CHECK(e == 0);
    }
  }
}

TEST_CASE("sparse echelon tracks membership") {
  SparseEchelon e;
  CHECK(e.insert(sparse_from_dense({1, 2, 0})));
  CHECK(e.insert(sparse_from_dense({0, 1, 1})));
  CHECK_FALSE(e.insert(sparse_from_dense({2, 5, 1})));
  CHECK(e.contains(sparse_from_dense({1, 3, 1})));
  CHECK_FALSE(e.contains(sparse_from_dense({0, 0, 1})));
  CHECK(e.rank() == 2);
}

TEST_CASE("rational roots of a polynomial") {
  // x (x - 1/2) (x + 3) = x^3 + 5/2 x^2 - 3/2 x
  const auto roots = rational_roots({Rational(0), Rational(-3, 2), Rational(5, 2), Rational(1)});
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -3);
  CHECK(roots[1] == 0);
  CHECK(roots[2] == Rational(1, 2));
  CHECK(rational_roots({Rational(2), Rational(0), Rational(1)}).empty());
  CHECK_THROWS_AS(rational_roots({Rational(0)}), std::invalid_argument);
}

TEST_CASE("polynomial evaluation and homogeneity") {
  const auto x = poly_variables(2);
  const Poly p = x[0] * x[0] * x[1] + Rational(3) * x[1] * x[1] * x[1];
  CHECK(p.is_homogeneous(3));
  CHECK_FALSE((p + x[0]).is_homogeneous(3));
  CHECK(p.evaluate({Rational(2), Rational(-1)}) == -4 - 3);
}

TEST_CASE("quadratic form signatures") {
  const Signature h = signature_and_witt(hyperbolic(3));
  CHECK(h.positives == 3);
  CHECK(h.negatives == 3);
  CHECK(h.witt_index == 3);
  const QuadraticForm q({Rational(1), Rational(2), Rational(-5), Rational(1, 3)});
  CHECK(signature_and_witt(q) == Signature{3, 1, 1});
  CHECK(signature_and_witt(orthogonal_sum(q, q.scaled(-1))).witt_index == 4);
  // The Gram matrix of a diagonalized form has the same signature.
  RationalMatrix g(3, 3);
  g(0, 1) = g(1, 0) = 1;
  g(2, 2) = -2;
  CHECK(signature_and_witt(diagonalize(g)) == Signature{1, 2, 1});
}
