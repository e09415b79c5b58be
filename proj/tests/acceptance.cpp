// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// against the allowed budget. Exit status is 0 only when every line passes.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "e7/descent.hpp"
#include "e7/fts.hpp"
#include "e7/gift.hpp"
#include "e7/hermitian.hpp"
#include "e7/modp.hpp"

using namespace e7;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

std::shared_ptr<const AlbertAlgebra> albert(bool split) {
  static const auto s = std::make_shared<const AlbertAlgebra>(AlbertAlgebra::split());
  static const auto d = std::make_shared<const AlbertAlgebra>(AlbertAlgebra::division());
  return split ? s : d;
}

const CheckResult& named(const std::vector<CheckResult>& checks, const std::string& name) {
  const CheckResult* r = find_check(checks, name);
  if (r == nullptr) throw std::logic_error("missing check " + name);
  return *r;
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix l = RationalMatrix::identity(n), u = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_rational(rng, 2, 2);
      u(j, i) = random_rational(rng, 2, 2);
    }
  return l * u;
}

Outcome degenerate_example() {
  Outcome o;
  for (std::size_t w : {26u, 28u}) {
    const TripleSystem ts = build_ms(w);
    const auto checks = check_axioms(ts, Budget{1, 100, 2, false});
    const std::string tag = "W=" + std::to_string(w) + " ";
    o.require(named(checks, "FTS1").passed() && named(checks, "FTS1").evidence.exhaustive, tag + "FTS1");
    o.require(named(checks, "FTS2").passed() && !named(checks, "FTS2").witness.is_null(), tag + "FTS2");
    o.require(named(checks, "FTS3").passed() && named(checks, "FTS3").evidence.samples >= 100, tag + "FTS3");
    o.require(named(checks, "FTS3'").passed() && named(checks, "FTS3'").evidence.samples >= 100, tag + "FTS3'");
    const CheckResult& bad = named(checks, "badtrid");
    if (!bad.passed()) {
      RationalVector x(ts.dimension(), Rational(0));
      x.front() = x.back() = 1;
      const RationalMatrix p = p_map(ts, x, x);
      o.notes << " " << tag << "tr(p(x⊗x)²) at x=(1,0,0,1) is " << trace_of_product(p, p)
              << " while 24q = 288;";
    }
    o.require(bad.passed(), tag + "badtrid");
  }
  return o;
}

Outcome nondegeneracy_criterion() {
  Outcome o;
  const TripleSystem ts = build_ms(27);
  const Classification c = classify(ts, Budget{2, 100, 2, false});
  o.require(c.degenerate, "degenerate verdict");
  o.require(c.evidence.detail.rfind("structured witness", 0) == 0, "structured witness");
  o.require(c.residual && *c.residual == 160, "residual 160");
  if (c.residual) o.notes << " residual " << *c.residual << " (formal dim W = 27);";
  o.require(check_ms_trace_form(ts, Budget{2, 100, 1, false}).passed(), "trform on W=27");
  o.require(check_ms_trace_form(build_ms(26), Budget{3, 100, 1, false}).passed(), "trform on W=26");
  return o;
}

Outcome calibration() {
  Outcome o;
  for (bool split : {true, false}) {
    const std::string tag = split ? "split " : "division ";
    const QuarticCoefficients solved = calibrate_albert_quartic(*albert(split), 11);
    o.require(solved == albert_quartic_coefficients(), tag + "calibration");
    const TripleSystem ts = build_albert(albert(split), solved);
    const Budget budget{5, 100, 2, true};
    const auto checks = check_axioms(ts, budget);
    for (const auto& r : checks) o.require(r.passed(), tag + r.name);
    for (const char* name : {"FTS3", "FTS3'"}) {
      const CheckResult& r = named(checks, name);
      o.require(r.evidence.exhaustive && r.evidence.primes >= 2, tag + name + " exhaustive mod p");
    }
    const Classification c = classify(ts, budget);
    o.require(!c.degenerate, tag + "nondegenerate");
    o.require(c.evidence.evidence.exhaustive && c.evidence.evidence.samples >= 100, tag + "classify evidence");
  }
  o.notes << " coefficients (12, -48, -48);";
  return o;
}

Outcome gift_axioms() {
  Outcome o;
  const Gift g = end_of(build_albert(albert(true)));
  const auto checks = check_gift_axioms(g, Budget{7, 25, 1, false});
  for (const auto& r : checks) o.require(r.passed(), "End(M(J^d)) " + r.name);
  o.require(!named(checks, "G2").witness.is_null(), "G2 witness");
  const auto ms = check_gift_axioms(end_of(build_ms(26)), Budget{7, 25, 1, false});
  for (const auto& r : ms) {
    if (r.name == "G5")
      o.require(r.status == Status::fail && !r.witness.is_null(), "End(M_s) G5 fails with witness");
    else
      o.require(r.passed(), "End(M_s) " + r.name);
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  const TripleSystem ts = build_albert(albert(true));
  const Gift g = end_of(ts);
  const TripleSystem back = gift_to_fts(g);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> pick(0, ts.dimension() - 1);
  bool same = true;
  for (int s = 0; s < 1000 && same; ++s) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    same = ts.tensor().basis_value(a, b, c) == back.tensor().basis_value(a, b, c);
  }
  o.require(same, "t on 1000 basis triples");
  o.require(same_gift(end_of(back), g), "π entrywise after the round trip");
  for (const Rational lambda : {Rational(2), Rational(-3)})
    o.require(same_gift(end_of(scale(ts, lambda)), g), "End(scale(ts, " + to_fraction_string(lambda) + "))");
  return o;
}

Outcome derivations() {
  Outcome o;
  const Gift g = end_of(build_albert(albert(true)));
  const DerivationReport rep = derivation_suite(g, Budget{17, 100, 3, false});
  o.require(rep.gd.passed() && rep.gd.evidence.samples >= 100, "GD on 100 samples");
  o.require(rep.pi_rank.primes_used.size() >= 3, "three primes");
  for (std::size_t r : rep.pi_rank.per_prime_rank) o.require(r == 133, "rank 133 modulo each prime");
  o.notes << " rank " << rep.pi_rank.rank << " modulo " << rep.pi_rank.primes_used.size() << " primes;";
  return o;
}

Outcome trace_forms() {
  Outcome o;
  o.require(signature_and_witt(trace_form(AlbertAlgebra::split())) == Signature{15, 12, 12}, "split (15,12)");
  o.require(signature_and_witt(trace_form(AlbertAlgebra::division())) == Signature{27, 0, 0}, "division (27,0)");
  return o;
}

Outcome real_table() {
  Outcome o;
  const auto rows = e7_real_table();
  const std::size_t w[] = {28, 28, 24, 0};
  const char* types[] = {"E⁰₇,₇", "E²⁸₇,₃", "E⁹₇,₄", "E¹³³₇,₀"};
  o.require(rows.size() == 4, "four rows");
  for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
    o.require(rows[i].witt_index == w[i] && rows[i].type == types[i], "row " + std::to_string(i + 1));
    o.require(rows[i].computed == (i >= 2), "row " + std::to_string(i + 1) + " computed flag");
  }
  return o;
}

Outcome descent() {
  Outcome o;
  const QuatConstResult built = quatconst_build(Rational(-1), Rational(-1));
  for (const auto& r : built.checks) o.require(r.passed(), r.name);
  o.require(built.gift.descent()->basis.size() == 3136, "3136 basis elements");
  for (const auto& r : quatconst_check(built, Budget{19, 25, 1, false})) o.require(r.passed(), r.name);
  for (std::size_t n = 1; n <= 3; ++n)
    o.require(symplem_verify(random_symplem_params(n, 100 + n)).passed(), "symplem n=" + std::to_string(n));
  return o;
}

Outcome gadgets() {
  Outcome o;
  const TripleSystem ts = build_ms(26);
  o.require(check_similarity(ts, varpi_matrix(ts), Rational(1), "varpi").passed(), "ϖ isometry");
  bool ok = true;
  for (std::uint64_t s = 0; s < 100 && ok; ++s) {
    auto rng = sample_rng(23, s);
    const Rational c = random_nonzero_rational(rng), d = random_nonzero_rational(rng);
    const auto u = random_rational_vector(rng, 26), v = random_rational_vector(rng, 26);
    ok = check_f_composition(ts, c, u, random_invertible(rng, 26), d, v, random_invertible(rng, 26));
  }
  o.require(ok, "f composition on 100 tuples");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "degenerate example M_s (W = 26, 28)", 60, degenerate_example},
      {2, "nondegeneracy criterion on M_s", 60, nondegeneracy_criterion},
      {3, "Albert calibration and nondegeneracy", 600, calibration},
      {4, "gift axioms", 300, gift_axioms},
      {5, "round trip and scale invariance", 120, round_trip},
      {6, "derivations and rank of π", 600, derivations},
      {7, "trace forms", 60, trace_forms},
      {8, "real-closed table", 1, real_table},
      {9, "quaternionic descent", 900, descent},
      {10, "ϖ and f gadgets", 60, gadgets},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < c.budget_seconds, "runtime budget");
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
              << std::setprecision(1) << seconds << "s of " << c.budget_seconds << "s)" << o.notes.str()
              << std::endl;
  }
  return all ? 0 : 1;
}
