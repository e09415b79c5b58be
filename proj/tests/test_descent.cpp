#include <memory>
#include <stdexcept>

#include "doctest.h"
#include "e7/brown.hpp"
#include "e7/descent.hpp"
#include "e7/hermitian.hpp"
#include "e7/rank.hpp"

using namespace e7;

namespace {

std::shared_ptr<const BrownAlgebra> split_brown() {
  static const auto b =
      std::make_shared<const BrownAlgebra>(std::make_shared<const AlbertAlgebra>(AlbertAlgebra::split()));
  return b;
}

const QuatConstResult& descended() {
  static const QuatConstResult r = quatconst_build(Rational(-1), Rational(-1));
  return r;
}

}  // namespace

TEST_CASE("Brown algebra unit, involution and ϖ") {
  const BrownAlgebra& B = *split_brown();
  const auto e = BrownAlgebra::unit<Rational>();
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto rng = sample_rng(1, s);
    const auto x = random_rational_vector(rng, 56), y = random_rational_vector(rng, 56);
    CHECK(B.multiply(e, x) == x);
    CHECK(B.multiply(x, e) == x);
    CHECK(BrownAlgebra::conj(BrownAlgebra::conj(x)) == x);
    const auto xy = B.multiply(x, y);
    CHECK(BrownAlgebra::varpi(xy) == B.multiply(BrownAlgebra::varpi(x), BrownAlgebra::varpi(y)));
    CHECK(BrownAlgebra::varpi(BrownAlgebra::conj(x)) == BrownAlgebra::conj(BrownAlgebra::varpi(x)));
    CHECK(BrownAlgebra::conj(xy) == B.multiply(BrownAlgebra::conj(y), BrownAlgebra::conj(x)));
  }
  // Skew space = kernel of conj + id, spanned by (1, 0, 0, -1).
  const RationalMatrix plus = BrownAlgebra::conj_matrix() + RationalMatrix::identity(56);
  const auto skew = nullspace(plus);
  REQUIRE(skew.size() == 1);
  CHECK(skew[0][BrownAlgebra::kAlpha] == -skew[0][BrownAlgebra::kBeta]);
  CHECK(exact_rank(plus) == 55);
}

TEST_CASE("Brown elements and flavors") {
  const auto B = split_brown();
  auto rng = sample_rng(2, 0);
  const BrownElement x = brown_element(B, random_rational_vector(rng, 56));
  const QuadFieldPtr k = make_quad_field(Rational(-1));
  const BrownElement s0 = brown_element(B, k, brown_s0(k));
  CHECK_THROWS_AS(brown_mul(x, s0), std::invalid_argument);
  CHECK(brown_conj(s0).coords == scaled(QuadExt(-1), s0.coords));
  CHECK(brown_mul(x, brown_element(B, BrownAlgebra::unit<Rational>())).coords == x.coords);
  Vec<QuadExt> not_fixed(56, QuadExt(0));
  not_fixed[0] = QuadExt(1);
  CHECK_THROWS_AS(brown_element(B, k, not_fixed), std::invalid_argument);
  CHECK_THROWS_AS(brown_element(B, RationalVector(3)), std::invalid_argument);
}

TEST_CASE("Brown descent has dimension 56 and is closed") {
  const auto basis = brown_descend(Rational(-2));
  REQUIRE(basis.size() == 56);
  const BrownAlgebra& B = *split_brown();
  for (const auto& v : basis) CHECK(is_descended(v));
  for (std::size_t i = 0; i < basis.size(); i += 11)
    for (std::size_t j = 0; j < basis.size(); j += 13) CHECK(is_descended(B.multiply(basis[i], basis[j])));
  CHECK(is_descended(convert_vector<QuadExt>(BrownAlgebra::unit<Rational>())));
  const QuadFieldPtr k = make_quad_field(Rational(-2));
  CHECK(is_descended(brown_s0(k)));
  CHECK_THROWS_AS(brown_descend(Rational(9)), std::domain_error);
}

TEST_CASE("hermitian trace forms and Witt indices") {
  const HermitianForm one(-1, -1, {Rational(1)});
  const Signature s = signature_and_witt(hermitian_trace_form(one));
  CHECK(s == Signature{4, 0, 0});
  CHECK(witt_index_hermitian(one) == 0);
  CHECK(witt_index_hermitian(HermitianForm(-1, -1, {Rational(1), Rational(-1)})) == 2);
  RationalVector coeffs{Rational(1)};
  const QuadraticForm t = trace_form(AlbertAlgebra::split());
  coeffs.insert(coeffs.end(), t.coefficients().begin(), t.coefficients().end());
  CHECK(witt_index_hermitian(HermitianForm(-1, -1, coeffs)) == 24);
  // Split Q: the norm form of M2 is 2ℍ, so a single coefficient gives index 1.
  CHECK(witt_index_hermitian(HermitianForm(1, -1, {Rational(3)})) == 1);
  CHECK_THROWS_AS(HermitianForm(-1, -1, {Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(HermitianForm(0, -1, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("hermitian Witt index is superadditive under orthogonal sums") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto rng = sample_rng(3, s);
    RationalVector c1, c2;
    for (int i = 0; i < 3; ++i) c1.push_back(random_nonzero_rational(rng));
    for (int i = 0; i < 4; ++i) c2.push_back(random_nonzero_rational(rng));
    RationalVector both = c1;
    both.insert(both.end(), c2.begin(), c2.end());
    const std::size_t w1 = witt_index_hermitian(HermitianForm(-1, -1, c1));
    const std::size_t w2 = witt_index_hermitian(HermitianForm(-1, -1, c2));
    CHECK(witt_index_hermitian(HermitianForm(-1, -1, both)) >= w1 + w2);
  }
}

TEST_CASE("real-closed table") {
  const auto rows = e7_real_table();
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].witt_index == 28);
  CHECK(rows[1].witt_index == 28);
  CHECK(rows[2].witt_index == 24);
  CHECK(rows[3].witt_index == 0);
  CHECK(rows[0].type == "E⁰₇,₇");
  CHECK(rows[1].type == "E²⁸₇,₃");
  CHECK(rows[2].type == "E⁹₇,₄");
  CHECK(rows[3].type == "E¹³³₇,₀");
  CHECK_FALSE(rows[0].computed);
  CHECK(rows[2].computed);
  CHECK(rows[3].computed);
}

TEST_CASE("symplectic descent lemma") {
  const SymplemReport base = symplem_verify({Rational(-1), Rational(-1), {Rational(1)}, {Rational(1)}});
  CHECK(base.passed());
  CHECK(base.form.coeffs == RationalVector{Rational(1)});
  for (std::size_t n = 1; n <= 3; ++n) {
    const SymplemParams p = random_symplem_params(n, 40 + n);
    const SymplemReport r = symplem_verify(p);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.passed(), c.name);
    for (std::size_t i = 0; i < n; ++i) CHECK(r.form.coeffs[i] == p.c[i] * p.a[i]);
  }
  CHECK_THROWS_AS(symplem_verify({Rational(4), Rational(-1), {Rational(1)}, {Rational(1)}}), std::domain_error);
  CHECK_THROWS_AS(symplem_verify({Rational(-1), Rational(0), {Rational(1)}, {Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(symplem_verify({Rational(-1), Rational(-1), {Rational(1)}, {}}), std::invalid_argument);
}

TEST_CASE("descent similarity and cocycle") {
  for (const Rational b : {Rational(-1), Rational(3, 2)}) {
    const RationalMatrix m = quatconst_twist(b);
    CHECK(m * m == b * RationalMatrix::identity(56));
  }
  CHECK_THROWS_AS(quatconst_similarity(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(quatconst_build(Rational(1), Rational(-1)), std::domain_error);
  CHECK_THROWS_AS(quatconst_build(Rational(-1), Rational(0)), std::invalid_argument);
}

TEST_CASE("descended gift over (-1, -1)") {
  const QuatConstResult& r = descended();
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed(), c.name);
  const Gift& g = r.gift;
  CHECK_FALSE(g.is_split());
  REQUIRE(g.descent().has_value());
  CHECK(g.descent()->basis.size() == 3136);
  CHECK(r.hermitian.coeffs.size() == 28);
  CHECK(r.hermitian.coeffs[0] == Rational(-1));
  for (const auto& c : quatconst_check(r, Budget{5, 2, 1, false})) CHECK_MESSAGE(c.passed(), c.name);
  // The identity is in A; a non-fixed matrix unit is not.
  CHECK(g.contains(Matrix<QuadExt>::identity(56)));
  Matrix<QuadExt> e(56, 56);
  e(0, 0) = QuadExt(1);
  CHECK_FALSE(g.contains(e));
}
