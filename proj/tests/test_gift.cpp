#include <memory>
#include <stdexcept>

#include "doctest.h"
#include "e7/fts.hpp"
#include "e7/gift.hpp"
#include "e7/modp.hpp"

using namespace e7;

namespace {

const TripleSystem& albert_split() {
  static const TripleSystem ts =
      build_albert(std::make_shared<const AlbertAlgebra>(AlbertAlgebra::split()));
  return ts;
}

const Gift& albert_gift() {
  static const Gift g = end_of(albert_split());
  return g;
}

Budget small(std::size_t samples, std::uint64_t seed = 2) { return {seed, samples, 1, false}; }

Status status_of(const std::vector<CheckResult>& checks, const std::string& name) {
  const CheckResult* r = find_check(checks, name);
  REQUIRE(r != nullptr);
  return r->status;
}

}  // namespace

TEST_CASE("End of the split Albert system is a gift") {
  const auto checks = check_gift_axioms(albert_gift(), small(2));
  REQUIRE(checks.size() == 5);
  for (const auto& r : checks) CHECK_MESSAGE(r.passed(), r.name);
  const CheckResult* g2 = find_check(checks, "G2");
  REQUIRE(g2 != nullptr);
  CHECK_FALSE(g2->witness.is_null());
  for (const auto& r : check_involution(albert_gift(), small(3))) CHECK_MESSAGE(r.passed(), r.name);
}

TEST_CASE("End of ms fails exactly G5") {
  const Gift g = end_of(build_ms(26));
  const auto checks = check_gift_axioms(g, small(2));
  for (const auto& r : checks) {
    if (r.name == "G5") {
      CHECK(r.status == Status::fail);
      CHECK_FALSE(r.witness.is_null());
    } else {
      CHECK_MESSAGE(r.passed(), r.name);
    }
  }
}

TEST_CASE("sign conventions of G4 and G5 are forced") {
  GiftCheckOptions literal_g4;
  literal_g4.g4_sigma_sign = -1;
  CHECK(status_of(check_gift_axioms(albert_gift(), small(1), literal_g4), "G4") == Status::fail);
  GiftCheckOptions negative_g5;
  negative_g5.g5_coefficient = -24;
  CHECK(status_of(check_gift_axioms(albert_gift(), small(1), negative_g5), "G5") == Status::fail);
}

TEST_CASE("zero pi violates G4") {
  const Gift z = albert_gift().with_zero_pi();
  CHECK(z.pi_is_zero());
  CHECK(status_of(check_gift_axioms(z, small(1)), "G4") == Status::fail);
}

TEST_CASE("sigma is the b-adjoint involution") {
  const Gift& g = albert_gift();
  const TripleSystem& ts = albert_split();
  auto rng = sample_rng(5, 0);
  const RationalMatrix f = random_matrix(rng, 56);
  const auto x = random_rational_vector(rng, 56), y = random_rational_vector(rng, 56);
  CHECK(ts.b(f * x, y) == ts.b(x, g.sigma(f) * y));
  CHECK(g.sigma(g.sigma(f)) == f);
  // φ_b(x⊗y) w = x b(y, w).
  const auto w = random_rational_vector(rng, 56);
  CHECK(g.phi(x, y) * w == scaled(ts.b(y, w), x));
}

TEST_CASE("sandwich and sigma2 agree with sigma on decomposables") {
  const Gift& g = albert_gift();
  auto rng = sample_rng(6, 0);
  std::array<RationalVector, 4> xs;
  for (auto& x : xs) x = random_rational_vector(rng, 56);
  // σ₂(φ(x1⊗x2) ⊗ φ(x3⊗x4)) = -φ(x1⊗x3) ⊗ φ(x2⊗x4).
  const TensorPairs<Rational> pairs = sigma2_split(g, xs[0], xs[1], xs[2], xs[3]);
  const RationalMatrix probe = random_matrix(rng, 56);
  const RationalMatrix expected = -(g.phi(xs[0], xs[2]) * probe * g.phi(xs[1], xs[3]));
  CHECK(sand(pairs, probe) == expected);
}

TEST_CASE("round trip through gift_to_fts") {
  const TripleSystem back = gift_to_fts(albert_gift());
  const TripleSystem& ts = albert_split();
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto rng = sample_rng(7, s);
    std::uniform_int_distribution<std::size_t> pick(0, 55);
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(ts.tensor().basis_value(a, b, c) == back.tensor().basis_value(a, b, c));
  }
  CHECK(same_gift(end_of(back), albert_gift()));
  // Rescaling b rescales t but leaves the gift unchanged.
  const TripleSystem back2 = gift_to_fts(albert_gift(), Rational(2) * ts.b_gram());
  auto rng = sample_rng(7, 99);
  const auto x = random_rational_vector(rng, 56), y = random_rational_vector(rng, 56),
             z = random_rational_vector(rng, 56);
  CHECK(back2.t(x, y, z) == scaled(Rational(2), ts.t(x, y, z)));
  CHECK_THROWS_AS(gift_to_fts(albert_gift(), RationalMatrix::identity(56)), std::invalid_argument);
}

TEST_CASE("End is invariant under scaling") {
  for (const Rational lambda : {Rational(2), Rational(-3)})
    CHECK(same_gift(end_of(scale(albert_split(), lambda)), albert_gift()));
}

TEST_CASE("derivations and rank of pi") {
  const DerivationReport rep = derivation_suite(albert_gift(), small(3));
  CHECK(rep.gd.passed());
  CHECK(rep.pi_rank.rank == 133);
  const RankReport ms_rank = pi_rank(end_of(build_ms(6)), random_primes(1, 2));
  CHECK(ms_rank.rank > 0);
}

TEST_CASE("isometries of the Albert system preserve the gift") {
  const Rational lambda(-2);
  RationalMatrix g(56, 56);
  g(0, 0) = 1 / (lambda * lambda * lambda);
  for (std::size_t k = 1; k <= 27; ++k) g(k, k) = lambda;
  for (std::size_t k = 28; k <= 54; ++k) g(k, k) = 1 / lambda;
  g(55, 55) = lambda * lambda * lambda;
  CHECK(check_isometry(albert_gift(), g, 2, 1).passed());
  CHECK_FALSE(check_isometry(albert_gift(), Rational(2) * RationalMatrix::identity(56), 1, 1).passed());
}

TEST_CASE("symmetric and skew dimensions") {
  const SymmetryDimensions d = symmetry_dimensions(end_of(build_ms(6)));
  // n = 14: skew n(n+1)/2, sym n(n-1)/2 for a symplectic involution.
  CHECK(d.skew == 105);
  CHECK(d.sym == 91);
  CHECK(d.sum == 196);
}

TEST_CASE("right ideals") {
  const Gift& g = albert_gift();
  const RightIdeal line = RightIdeal::hom_into(56, {basis_vector<Rational>(56, 0)});
  CHECK(line.rank() == 1);
  CHECK(line.dimension() == 56);
  const IdealPredicates p = ideal_predicates(g, line);
  CHECK(p.isotropic);
  CHECK(p.singular);
  CHECK(p.inner);

  // A generic vector is not singular: π(φ(u⊗u)) ≠ 0.
  auto rng = sample_rng(9, 0);
  const RightIdeal generic = RightIdeal::hom_into(56, {random_rational_vector(rng, 56)});
  const IdealPredicates q = ideal_predicates(g, generic);
  CHECK(q.isotropic);
  CHECK_FALSE(q.singular);

  std::vector<RationalVector> half;
  for (std::size_t i = 0; i < 28; ++i) half.push_back(basis_vector<Rational>(56, i));
  const IdealPredicates h = ideal_predicates(g, RightIdeal::hom_into(56, half));
  CHECK(h.rank == 28);
  CHECK(h.isotropic);

  RationalMatrix e00(56, 56), e01(56, 56);
  e00(0, 0) = 1;
  e01(0, 1) = 1;
  CHECK_THROWS_AS(RightIdeal::from_elements(56, {e00}), std::invalid_argument);
  std::vector<RationalMatrix> row;
  for (std::size_t j = 0; j < 56; ++j) {
    RationalMatrix m(56, 56);
    m(0, j) = 1;
    row.push_back(m);
  }
  const RightIdeal from_row = RightIdeal::from_elements(56, row);
  CHECK(from_row.rank() == 1);
  CHECK(from_row.contains(e01));
}

TEST_CASE("descended-only operations reject split gifts") {
  CHECK_THROWS(albert_gift().twist_action(Matrix<QuadExt>(56, 56)));
}
