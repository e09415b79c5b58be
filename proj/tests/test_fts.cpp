#include <memory>
#include <stdexcept>

#include "doctest.h"
#include "e7/fts.hpp"

using namespace e7;

namespace {

std::shared_ptr<const AlbertAlgebra> split_albert() {
  static const auto J = std::make_shared<const AlbertAlgebra>(AlbertAlgebra::split());
  return J;
}

const TripleSystem& albert_split() {
  static const TripleSystem ts = build_albert(split_albert());
  return ts;
}

Budget small(std::size_t samples, std::uint64_t seed = 1) { return {seed, samples, 1, false}; }

Status status_of(const std::vector<CheckResult>& checks, const std::string& name) {
  const CheckResult* r = find_check(checks, name);
  REQUIRE(r != nullptr);
  return r->status;
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  // Unit lower triangular times unit upper triangular.
  RationalMatrix l = RationalMatrix::identity(n), u = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_rational(rng, 2, 2);
      u(j, i) = random_rational(rng, 2, 2);
    }
  return l * u;
}

}  // namespace

TEST_CASE("ms systems satisfy FTS1-FTS3 and FTS3'") {
  for (std::size_t w : {2u, 6u, 26u}) {
    const TripleSystem ts = build_ms(w);
    CHECK(ts.dimension() == 2 * w + 2);
    CHECK(ts.b_nondegenerate());
    const auto checks = check_axioms(ts, small(5));
    CHECK(status_of(checks, "FTS1") == Status::pass);
    CHECK(status_of(checks, "FTS2") == Status::pass);
    CHECK(status_of(checks, "FTS3") == Status::pass);
    CHECK(status_of(checks, "FTS3'") == Status::pass);
    CHECK_FALSE(find_fts1_violation(ts).has_value());
  }
}

TEST_CASE("ms t agrees with the polarized closed form") {
  const TripleSystem ts = build_ms(6);
  const TrilinearTensor closed = ms_closed_form_tensor(ts.provenance().s_gram);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto rng = sample_rng(4, s);
    const auto x = random_rational_vector(rng, 14), y = random_rational_vector(rng, 14),
               z = random_rational_vector(rng, 14);
    CHECK(ts.t(x, y, z) == contract_serial(closed, x, y, z));
  }
}

TEST_CASE("badtrid depends on dim W for ms") {
  // tr(p(x⊗x)²) = 8 (dim W + 9) det(x)² while 24 q = 288 det(x)².
  for (std::size_t w : {26u, 27u, 28u}) {
    const TripleSystem ts = build_ms(w);
    RationalVector x(ts.dimension(), Rational(0));
    x.front() = 1;
    x.back() = 1;
    const RationalMatrix p = p_map(ts, x, x);
    CHECK(trace_of_product(p, p) == Rational(8 * (static_cast<long>(w) + 9)));
  }
  CHECK(status_of(check_axioms(build_ms(26), small(3)), "badtrid") == Status::fail);
  CHECK(status_of(check_axioms(build_ms(27), small(3)), "badtrid") == Status::pass);
}

TEST_CASE("formal ms with odd W") {
  const TripleSystem ts = build_ms(27);
  CHECK(ts.provenance().formal);
  CHECK_FALSE(ts.b_nondegenerate());
  CHECK_THROWS_AS(ts.b_form(), std::domain_error);
}

TEST_CASE("ms is degenerate with residual 8 (dim W - 7)") {
  for (std::size_t w : {26u, 27u, 28u}) {
    const TripleSystem ts = build_ms(w);
    const Classification c = classify(ts, small(3));
    CHECK(c.degenerate);
    REQUIRE(c.residual.has_value());
    CHECK(*c.residual == Rational(8 * (static_cast<long>(w) - 7)));
    const auto [x, y] = ms_structured_witness(ts);
    const MsDiagnostics d = ms_diagnostics(ts, x, y);
    CHECK(d.det_x == -1);
    CHECK(d.det_y == -1);
    CHECK(d.det_lin == 0);
    CHECK(d.remainder == Rational(static_cast<long>(w) - 7));
  }
  CHECK(check_ms_trace_form(build_ms(26), small(20)).passed());
  CHECK_THROWS_AS(check_ms_trace_form(albert_split(), small(1)), std::invalid_argument);
}

TEST_CASE("varpi is an isometry of ms and f composes") {
  const TripleSystem ts = build_ms(6);
  CHECK(check_similarity(ts, varpi_matrix(ts), Rational(1), "varpi").passed());
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto rng = sample_rng(6, s);
    const Rational c = random_nonzero_rational(rng), d = random_nonzero_rational(rng);
    const auto u = random_rational_vector(rng, 6), v = random_rational_vector(rng, 6);
    const RationalMatrix phi = random_invertible(rng, 6), psi = random_invertible(rng, 6);
    CHECK(check_f_composition(ts, c, u, phi, d, v, psi));
  }
  CHECK_THROWS_AS(f_map(ts, Rational(0), RationalVector(6), RationalMatrix::identity(6)), std::domain_error);
}

TEST_CASE("Albert quartic coefficients") {
  const QuarticCoefficients c = albert_quartic_coefficients();
  CHECK(c == QuarticCoefficients{12, -48, -48});
  CHECK(calibrate_albert_quartic(*split_albert(), 3) == c);
}

TEST_CASE("Albert systems satisfy the axioms and are nondegenerate") {
  const auto checks = check_axioms(albert_split(), small(3));
  for (const auto& r : checks) CHECK_MESSAGE(r.passed(), r.name);
  const Classification c = classify(albert_split(), small(3));
  CHECK_FALSE(c.degenerate);
  const TripleSystem div = build_albert(std::make_shared<const AlbertAlgebra>(AlbertAlgebra::division()));
  for (const auto& r : check_axioms(div, small(2))) CHECK_MESSAGE(r.passed(), r.name);
}

TEST_CASE("the sign-flipped candidate violates FTS3") {
  const TripleSystem wrong = build_albert(split_albert(), QuarticCoefficients{12, 48, -48});
  CHECK(status_of(check_axioms(wrong, small(2)), "FTS3") == Status::fail);
}

TEST_CASE("Albert isometries and similarities") {
  const TripleSystem& ts = albert_split();
  const Rational lambda(2, 3);
  RationalMatrix g(56, 56);
  g(0, 0) = 1 / (lambda * lambda * lambda);
  for (std::size_t k = 1; k <= 27; ++k) g(k, k) = lambda;
  for (std::size_t k = 28; k <= 54; ++k) g(k, k) = 1 / lambda;
  g(55, 55) = lambda * lambda * lambda;
  CHECK(check_similarity(ts, g, Rational(1), "isometry").passed());
  CHECK_FALSE(check_similarity(ts, g, Rational(2), "wrong multiplier").passed());
  CHECK(check_similarity(ts, Rational(3) * RationalMatrix::identity(56), Rational(9), "scalar").passed());
}

TEST_CASE("scaling keeps the axioms") {
  const TripleSystem ms = build_ms(4);
  const TripleSystem scaled_ms = scale(ms, Rational(-3));
  CHECK(scaled_ms.provenance().kind == SystemKind::scaled);
  for (const auto& r : check_axioms(scaled_ms, small(3)))
    if (r.name != "badtrid") CHECK_MESSAGE(r.passed(), r.name);
}

TEST_CASE("p map definition") {
  const TripleSystem ts = build_ms(4);
  auto rng = sample_rng(3, 0);
  const auto u = random_rational_vector(rng, 10), v = random_rational_vector(rng, 10),
             w = random_rational_vector(rng, 10);
  const RationalVector expected = ts.t(u, v, w) - scaled(ts.b(w, u), v) - scaled(ts.b(w, v), u);
  CHECK(p_map(ts, u, v) * w == expected);
}

TEST_CASE("quartic duality rejects bad input") {
  const auto x = poly_variables(2);
  RationalMatrix g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = -1;
  CHECK_THROWS_AS(build_from_quartic(g, x[0] * x[1], Provenance{}), std::invalid_argument);
  RationalMatrix zero(2, 2);
  CHECK_THROWS_AS(build_from_quartic(zero, x[0] * x[0] * x[1] * x[1], Provenance{}), std::domain_error);
  RationalMatrix sym(2, 2);
  sym(0, 1) = sym(1, 0) = 1;
  CHECK_THROWS_AS(TripleSystem(sym, TrilinearTensor(2, {}), Provenance{}), std::invalid_argument);
}
