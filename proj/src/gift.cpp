#include "e7/gift.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <type_traits>

#include "e7/kernels.hpp"
#include "e7/modp.hpp"

namespace e7 {

SparseRationalMatrix::SparseRationalMatrix(const RationalMatrix& m) : n(m.rows()), rows(m.rows()) {
  if (!m.is_square()) throw std::invalid_argument("sparse matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) rows[i].emplace_back(static_cast<std::uint32_t>(j), m(i, j));
}

std::string to_string(GiftKind k) { return k == GiftKind::split ? "split" : "descended"; }

Gift::Gift(std::shared_ptr<const TripleSystem> system, std::string label,
           std::optional<GiftDescent> descent)
    : system_(std::move(system)),
      label_(std::move(label)),
      descent_(std::move(descent)),
      pi_cache_(std::make_shared<PiCache>()) {
  if (!system_->b_nondegenerate()) throw std::domain_error("End(M) needs a nondegenerate b");
  n_ = system_->dimension();
  gram_ = SparseRationalMatrix(system_->b_gram());
  gram_inv_dense_ = inverse(system_->b_gram());
  gram_inv_ = SparseRationalMatrix(gram_inv_dense_);
  if (descent_) {
    if (!descent_->field) throw std::invalid_argument("descent data needs a quadratic field");
    twist_ = SparseRationalMatrix(descent_->twist);
    twist_inv_ = SparseRationalMatrix(descent_->twist_inv);
  }
}

Gift Gift::with_zero_pi() const {
  Gift g = *this;
  g.zero_pi_ = true;
  g.label_ = label_ + " with pi = 0";
  g.pi_cache_ = std::make_shared<PiCache>();
  return g;
}

std::vector<SparseColumn> Gift::compute_pi_columns(bool parallel) const {
  const std::size_t n = n_;
  const std::size_t dim = n * n;
  std::vector<SparseColumn> cols(dim);
  if (zero_pi_) return cols;
  const TrilinearTensor& t = system_->tensor();
  const auto& entries = t.entries();
  // X = E_cd G^{-1} = e_c g_d^T with g_d row d of G^{-1}, so
  // π(E_cd) = T(X) + E_cd + g_d (row c of G).
  auto column = [&](std::size_t idx) {
    const std::size_t c = idx / n, d = idx % n;
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [b, gdb] : gram_inv_.rows[d]) {
      const auto [lo, hi] = t.range(c, b);
      for (std::size_t k = lo; k < hi; ++k)
        acc[static_cast<std::uint32_t>(entries[k].out * n + entries[k].c)] += entries[k].value * gdb;
    }
    acc[static_cast<std::uint32_t>(c * n + d)] += 1;
    for (const auto& [i, gdi] : gram_inv_.rows[d])
      for (const auto& [j, gcj] : gram_.rows[c]) acc[static_cast<std::uint32_t>(i * n + j)] += gdi * gcj;
    SparseColumn out;
    for (auto& [k, v] : acc)
      if (v != 0) out.emplace_back(k, std::move(v));
    return out;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t idx = 0; idx < dim; ++idx) cols[idx] = column(idx);
  } else {
    for (std::size_t idx = 0; idx < dim; ++idx) cols[idx] = column(idx);
  }
  return cols;
}

const std::vector<SparseColumn>& Gift::pi_columns() const {
  std::call_once(pi_cache_->once, [&] { pi_cache_->columns = compute_pi_columns(true); });
  return pi_cache_->columns;
}

std::vector<SparseColumn> Gift::pi_columns_serial() const { return compute_pi_columns(false); }

Matrix<QuadExt> Gift::twist_action(const Matrix<QuadExt>& x) const {
  if (!descent_) throw std::invalid_argument("twist_action needs a descended gift");
  return twist_inv_.right_times(twist_.left_times(conj(x)));
}

bool Gift::contains(const Matrix<QuadExt>& x) const { return twist_action(x) == x; }

Matrix<QuadExt> Gift::densify(const SparseQuadMatrix& m) const {
  Matrix<QuadExt> out(n_, n_);
  for (const auto& [r, c, v] : m) out(r, c) += v;
  return out;
}

Gift end_of(const TripleSystem& ts) {
  return Gift(std::make_shared<const TripleSystem>(ts), "End(" + ts.provenance().label + ")");
}

// ---------------------------------------------------------------- sampling

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix m(n, n);
  for (auto& v : m.data()) v = random_rational(rng, 5, 3);
  return m;
}

Matrix<QuadExt> random_fixed_element(const Gift& g, std::mt19937_64& rng) {
  if (!g.descent()) throw std::invalid_argument("random_fixed_element needs a descended gift");
  std::uniform_int_distribution<int> coeff(-3, 3);
  const std::size_t n = g.degree();
  Matrix<QuadExt> out(n, n);
  for (const auto& element : g.descent()->basis) {
    const int r = coeff(rng);
    if (r == 0) continue;
    for (const auto& [row, col, v] : element) out(row, col) += Rational(r) * v;
  }
  return out;
}

Json matrix_witness(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(witness_vector(m.row(i)));
  return rows;
}

Json matrix_witness(const Matrix<QuadExt>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({to_fraction_string(m(i, j).u()), to_fraction_string(m(i, j).v())}));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Json vector_witness(const RationalVector& v) { return witness_vector(v); }
Json vector_witness(const Vec<QuadExt>& v) {
  Json out = Json::array();
  for (const auto& x : v)
    out.push_back(Json::array({to_fraction_string(x.u()), to_fraction_string(x.v())}));
  return out;
}
Json scalar_witness(const Rational& v) { return witness_scalar(v); }
Json scalar_witness(const QuadExt& v) {
  return Json::array({to_fraction_string(v.u()), to_fraction_string(v.v())});
}

/// Random elements of A and random vectors of V ⊗ K for one scalar type.
template <class S>
struct Sampler {
  std::function<Matrix<S>(std::mt19937_64&)> element;
  std::function<Vec<S>(std::mt19937_64&)> vector;
};

Sampler<Rational> rational_sampler(const Gift& g) {
  const std::size_t n = g.degree();
  return {[n](std::mt19937_64& rng) { return random_matrix(rng, n); },
          [n](std::mt19937_64& rng) { return random_rational_vector(rng, n, 5, 3); }};
}

Sampler<QuadExt> quad_sampler(const Gift& g) {
  const std::size_t n = g.degree();
  const QuadFieldPtr field = g.descent()->field;
  return {[&g](std::mt19937_64& rng) { return random_fixed_element(g, rng); },
          [n, field](std::mt19937_64& rng) {
            Vec<QuadExt> v(n);
            for (auto& x : v) x = QuadExt(random_rational(rng, 5, 3), random_rational(rng, 5, 3), field);
            return v;
          }};
}

CheckResult make_result(const std::string& name, std::size_t samples, const std::string& detail) {
  CheckResult r;
  r.name = name;
  r.evidence.samples = samples;
  r.detail = detail;
  return r;
}

template <class S>
std::vector<CheckResult> run_gift_axioms(const Gift& g, const Budget& budget,
                                         const GiftCheckOptions& options, const Sampler<S>& sample) {
  std::vector<CheckResult> out;
  const std::size_t samples = std::max<std::size_t>(budget.samples, 1);
  auto skew = [&](std::mt19937_64& rng) {
    const Matrix<S> a = sample.element(rng);
    return a - g.sigma(a);
  };

  {  // G1
    std::mt19937_64 rng(budget.seed ^ 0x4731ULL);
    CheckResult r = make_result("G1", samples, "sigma(pi(a)) = pi(sigma(a)) = -pi(a)");
    for (std::size_t k = 0; k < samples; ++k) {
      const Matrix<S> a = sample.element(rng);
      const Matrix<S> pa = g.pi(a);
      const Matrix<S> neg = -pa;
      if (g.sigma(pa) != neg || g.pi(g.sigma(a)) != neg) {
        r.status = Status::fail;
        r.witness = Json{{"a", matrix_witness(a)}};
        break;
      }
    }
    out.push_back(std::move(r));
  }
  {  // G2
    std::mt19937_64 rng(budget.seed ^ 0x4732ULL);
    CheckResult r = make_result("G2", 0, "a pi(a) != 2 a^2 for some skew a");
    r.status = Status::inconclusive;
    for (std::size_t k = 0; k < options.g2_budget; ++k) {
      const Matrix<S> a = skew(rng);
      r.evidence.samples = k + 1;
      if (a * g.pi(a) != S(2) * (a * a)) {
        r.status = Status::pass;
        r.witness = Json{{"a", matrix_witness(a)}};
        break;
      }
    }
    out.push_back(std::move(r));
  }
  {  // G3
    std::mt19937_64 rng(budget.seed ^ 0x4733ULL);
    CheckResult r = make_result("G3", samples, "pi(pi(a) a) = 0 for skew a");
    for (std::size_t k = 0; k < samples; ++k) {
      const Matrix<S> a = skew(rng);
      if (!g.pi(g.pi(a) * a).is_zero_matrix()) {
        r.status = Status::fail;
        r.witness = Json{{"a", matrix_witness(a)}};
        break;
      }
    }
    out.push_back(std::move(r));
  }
  {  // G4
    std::mt19937_64 rng(budget.seed ^ 0x4734ULL);
    const std::string sign = options.g4_sigma_sign > 0 ? "+" : "-";
    CheckResult r = make_result("G4", samples,
                                "h(a) a' = -h^(sigma2(a ⊗ a')) with h = pi " + sign +
                                    " sigma - id, a, a' decomposable");
    const S sigma_sign(options.g4_sigma_sign);
    auto h = [&](const Matrix<S>& m) { return g.pi(m) + sigma_sign * g.sigma(m) - m; };
    for (std::size_t k = 0; k < samples; ++k) {
      const Vec<S> x1 = sample.vector(rng), x2 = sample.vector(rng), x3 = sample.vector(rng),
                   x4 = sample.vector(rng);
      const Matrix<S> lhs = h(g.phi(x1, x2)) * g.phi(x3, x4);
      Matrix<S> rhs(g.degree(), g.degree());
      for (const auto& [c, d] : sigma2_split(g, x1, x2, x3, x4)) rhs -= h(c) * d;
      if (lhs != rhs) {
        r.status = Status::fail;
        r.witness = Json{{"x1", vector_witness(x1)},
                         {"x2", vector_witness(x2)},
                         {"x3", vector_witness(x3)},
                         {"x4", vector_witness(x4)}};
        break;
      }
    }
    out.push_back(std::move(r));
  }
  {  // G5
    std::mt19937_64 rng(budget.seed ^ 0x4735ULL);
    CheckResult r = make_result("G5", samples,
                                "Trd(pi(a) pi(a')) = " + std::to_string(options.g5_coefficient) +
                                    " Trd(pi(a) a')");
    for (std::size_t k = 0; k < samples; ++k) {
      const Matrix<S> a = sample.element(rng), ap = sample.element(rng);
      const Matrix<S> pa = g.pi(a);
      const S lhs = trace_of_product(pa, g.pi(ap));
      const S rhs = S(options.g5_coefficient) * trace_of_product(pa, ap);
      if (lhs != rhs) {
        r.status = Status::fail;
        r.witness = Json{{"a", matrix_witness(a)},
                         {"a_prime", matrix_witness(ap)},
                         {"lhs", scalar_witness(lhs)},
                         {"rhs", scalar_witness(rhs)}};
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <class S>
std::vector<CheckResult> run_involution_checks(const Gift& g, const Budget& budget,
                                               const Sampler<S>& sample) {
  std::vector<CheckResult> out;
  const std::size_t samples = std::max<std::size_t>(budget.samples, 1);
  std::mt19937_64 rng(budget.seed ^ 0x5167ULL);
  CheckResult anti = make_result("sigma anti-automorphism", samples, "sigma(ab) = sigma(b) sigma(a)");
  CheckResult order = make_result("sigma order 2", samples, "sigma(sigma(a)) = a");
  CheckResult closure = make_result("closure", samples, "sigma(a), pi(a), a a' lie in A");
  for (std::size_t k = 0; k < samples; ++k) {
    const Matrix<S> a = sample.element(rng), b = sample.element(rng);
    const Matrix<S> ab = a * b;
    if (anti.passed() && g.sigma(ab) != g.sigma(b) * g.sigma(a)) {
      anti.status = Status::fail;
      anti.witness = Json{{"a", matrix_witness(a)}, {"b", matrix_witness(b)}};
    }
    if (order.passed() && g.sigma(g.sigma(a)) != a) {
      order.status = Status::fail;
      order.witness = Json{{"a", matrix_witness(a)}};
    }
    if constexpr (std::is_same_v<S, QuadExt>) {
      if (closure.passed() &&
          !(g.contains(a) && g.contains(g.sigma(a)) && g.contains(g.pi(a)) && g.contains(ab))) {
        closure.status = Status::fail;
        closure.witness = Json{{"a", matrix_witness(a)}, {"b", matrix_witness(b)}};
      }
    }
  }
  out.push_back(std::move(anti));
  out.push_back(std::move(order));
  if (g.descent()) out.push_back(std::move(closure));
  return out;
}

void require_split(const Gift& g, const char* what) {
  if (!g.is_split()) throw std::invalid_argument(std::string(what) + " needs a split gift");
}

}  // namespace

std::vector<CheckResult> check_gift_axioms(const Gift& g, const Budget& budget,
                                           const GiftCheckOptions& options) {
  if (g.is_split()) return run_gift_axioms(g, budget, options, rational_sampler(g));
  return run_gift_axioms(g, budget, options, quad_sampler(g));
}

std::vector<CheckResult> check_involution(const Gift& g, const Budget& budget) {
  if (g.is_split()) return run_involution_checks(g, budget, rational_sampler(g));
  return run_involution_checks(g, budget, quad_sampler(g));
}

// ---------------------------------------------------------------- gift -> fts

TripleSystem gift_to_fts(const Gift& g) { return gift_to_fts(g, g.b_gram()); }

TripleSystem gift_to_fts(const Gift& g, const RationalMatrix& b_gram) {
  require_split(g, "gift_to_fts");
  const std::size_t n = g.degree();
  if (b_gram.rows() != n || b_gram.cols() != n) throw std::invalid_argument("b must act on V");
  // σ is adjoint to b exactly when b is a nonzero multiple of the gift's form.
  const RationalMatrix& own = g.b_gram();
  std::optional<Rational> ratio;
  for (std::size_t k = 0; k < own.data().size(); ++k) {
    const Rational& o = own.data()[k];
    const Rational& v = b_gram.data()[k];
    if (o == 0 ? v != 0 : false) throw std::invalid_argument("sigma is not adjoint to the given b");
    if (o == 0) continue;
    const Rational q = v / o;
    if (q == 0 || (ratio && *ratio != q)) throw std::invalid_argument("sigma is not adjoint to the given b");
    ratio = q;
  }
  const auto& cols = g.pi_columns();
  const SparseRationalMatrix b_rows(b_gram);
  std::vector<std::vector<TensorEntry>> per_a(n);
  // φ_b(e_a⊗e_b) = Σ_d B(b, d) E_ad, so π(φ_b(e_a⊗e_b)) e_c collects entries
  // r * n + c of those columns.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<TensorEntry>& entries = per_a[a];
    for (std::size_t b = 0; b < n; ++b) {
      std::map<std::pair<std::size_t, std::size_t>, Rational> acc;  // (c, out)
      for (const auto& [d, bbd] : b_rows.rows[b])
        for (const auto& [idx, v] : cols[a * n + d]) acc[{idx % n, idx / n}] += bbd * v;
      for (std::size_t c = 0; c < n; ++c) {
        if (b_gram(c, a) != 0) acc[{c, b}] += b_gram(c, a);
        if (b_gram(c, b) != 0) acc[{c, a}] += b_gram(c, b);
      }
      for (const auto& [key, v] : acc)
        if (v != 0)
          entries.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                             static_cast<std::uint16_t>(key.first),
                             static_cast<std::uint16_t>(key.second), v});
    }
  }
  std::vector<TensorEntry> all;
  for (auto& part : per_a) all.insert(all.end(), part.begin(), part.end());
  Provenance p;
  p.kind = SystemKind::from_gift;
  p.label = "from_gift(" + g.label() + ")";
  return TripleSystem(b_gram, TrilinearTensor(n, std::move(all)), std::move(p));
}

bool same_gift(const Gift& a, const Gift& b) {
  if (a.degree() != b.degree() || a.is_split() != b.is_split()) return false;
  const RationalMatrix& ga = a.b_gram();
  const RationalMatrix& gb = b.b_gram();
  std::optional<Rational> ratio;
  for (std::size_t k = 0; k < ga.data().size(); ++k) {
    const Rational& x = ga.data()[k];
    const Rational& y = gb.data()[k];
    if ((x == 0) != (y == 0)) return false;
    if (x == 0) continue;
    const Rational q = y / x;
    if (ratio && *ratio != q) return false;
    ratio = q;
  }
  return a.pi_columns() == b.pi_columns();
}

// ---------------------------------------------------------------- derivations

namespace {

template <class S>
CheckResult run_gd(const Gift& g, const Budget& budget, const Sampler<S>& sample) {
  const std::size_t samples = std::max<std::size_t>(budget.samples, 1);
  CheckResult r = make_result("GD", samples, "f = pi(a) is skew and pi(fa') - pi(a'f) = f pi(a') - pi(a') f");
  std::mt19937_64 rng(budget.seed ^ 0x6744ULL);
  for (std::size_t k = 0; k < samples; ++k) {
    const Matrix<S> a = sample.element(rng), ap = sample.element(rng);
    const Matrix<S> f = g.pi(a);
    if (g.sigma(f) != -f || !satisfies_gd(g, f, ap)) {
      r.status = Status::fail;
      r.witness = Json{{"a", matrix_witness(a)}, {"a_prime", matrix_witness(ap)}};
      break;
    }
  }
  return r;
}

}  // namespace

RankReport pi_rank(const Gift& g, const std::vector<std::uint64_t>& primes, bool parallel) {
  const auto& cols = g.pi_columns();
  RankReport report;
  report.mode = RankMode::modular;
  for (std::uint64_t p : primes) {
    const PrimeField field(p);
    std::vector<kernels::ModSparseRow> rows;
    rows.reserve(cols.size());
    bool ok = true;
    for (const auto& col : cols) {
      kernels::ModSparseRow row;
      for (const auto& [idx, v] : col) {
        const auto r = field.reduce(v);
        if (!r) {
          ok = false;
          break;
        }
        if (*r != 0) row.emplace_back(idx, *r);
      }
      if (!ok) break;
      if (!row.empty()) rows.push_back(std::move(row));
    }
    if (!ok) {
      report.primes_skipped.push_back(p);
      continue;
    }
    const std::size_t rk = parallel ? kernels::rank_mod_p_sparse_parallel(rows, g.dimension(), field)
                                    : kernels::rank_mod_p_sparse_serial(rows, g.dimension(), field);
    report.primes_used.push_back(p);
    report.per_prime_rank.push_back(rk);
    report.rank = std::max(report.rank, rk);
  }
  return report;
}

DerivationReport derivation_suite(const Gift& g, const Budget& budget) {
  DerivationReport out;
  out.gd = g.is_split() ? run_gd(g, budget, rational_sampler(g)) : run_gd(g, budget, quad_sampler(g));
  out.pi_rank = pi_rank(g, random_primes(std::max<std::size_t>(budget.primes, 1), budget.seed));
  return out;
}

CheckResult check_isometry(const Gift& g, const RationalMatrix& f, std::size_t samples,
                           std::uint64_t seed) {
  require_split(g, "check_isometry");
  CheckResult r = make_result("isometry", samples, "sigma(f) f = 1 and pi(f a f^-1) = f pi(a) f^-1");
  const std::size_t n = g.degree();
  if (g.sigma(f) * f != RationalMatrix::identity(n)) {
    r.status = Status::fail;
    r.detail = "sigma(f) f != 1";
    return r;
  }
  const RationalMatrix finv = inverse(f);
  std::mt19937_64 rng(seed ^ 0x1504ULL);
  for (std::size_t k = 0; k < samples; ++k) {
    const RationalMatrix a = random_matrix(rng, n);
    if (g.pi(f * a * finv) != f * g.pi(a) * finv) {
      r.status = Status::fail;
      r.witness = Json{{"a", matrix_witness(a)}};
      break;
    }
  }
  return r;
}

SymmetryDimensions symmetry_dimensions(const Gift& g) {
  require_split(g, "symmetry_dimensions");
  const std::size_t n = g.degree();
  const RationalMatrix& gram = g.b_gram();
  const RationalMatrix ginv = inverse(gram);
  const SparseRationalMatrix gs(gram);
  // σ(E_cd) = G^{-1} E_dc G = (column d of G^{-1}) (row c of G).
  std::vector<SparseRow> skew, sym;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      std::map<std::size_t, Rational> minus, plus;
      minus[c * n + d] += 1;
      plus[c * n + d] += 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (ginv(i, d) == 0) continue;
        for (const auto& [j, gcj] : gs.rows[c]) {
          minus[i * n + j] -= ginv(i, d) * gcj;
          plus[i * n + j] += ginv(i, d) * gcj;
        }
      }
      auto to_row = [](const std::map<std::size_t, Rational>& m) {
        SparseRow row;
        for (const auto& [k, v] : m)
          if (v != 0) row.emplace_back(k, v);
        return row;
      };
      skew.push_back(to_row(minus));
      sym.push_back(to_row(plus));
    }
  SymmetryDimensions out;
  // a - σ(a) spans Skew and a + σ(a) spans Sym.
  out.skew = exact_rank_sparse(skew);
  out.sym = exact_rank_sparse(sym);
  std::vector<SparseRow> both = skew;
  both.insert(both.end(), sym.begin(), sym.end());
  out.sum = exact_rank_sparse(both);
  return out;
}

// ---------------------------------------------------------------- ideals

RightIdeal RightIdeal::hom_into(std::size_t n, const std::vector<RationalVector>& spanning) {
  RightIdeal I;
  I.n_ = n;
  SparseEchelon echelon;
  for (const auto& v : spanning) {
    if (v.size() != n) throw std::invalid_argument("ideal image vectors must lie in V");
    if (echelon.insert(sparse_from_dense(v))) I.image_.push_back(v);
  }
  return I;
}

RightIdeal RightIdeal::from_elements(std::size_t n, const std::vector<RationalMatrix>& elements) {
  std::vector<RationalVector> columns;
  std::vector<SparseRow> flat;
  for (const auto& m : elements) {
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("ideal elements must lie in A");
    for (std::size_t j = 0; j < n; ++j) columns.push_back(m.col(j));
    flat.push_back(sparse_from_dense(m.data()));
  }
  RightIdeal I = hom_into(n, columns);
  if (exact_rank_sparse(flat) != I.dimension())
    throw std::invalid_argument("elements do not span a right ideal");
  return I;
}

bool RightIdeal::contains(const RationalMatrix& f) const {
  SparseEchelon echelon;
  for (const auto& u : image_) echelon.insert(sparse_from_dense(u));
  for (std::size_t j = 0; j < f.cols(); ++j)
    if (!echelon.contains(sparse_from_dense(f.col(j)))) return false;
  return true;
}

IdealPredicates ideal_predicates(const Gift& g, const RightIdeal& ideal) {
  require_split(g, "ideal_predicates");
  const std::size_t n = g.degree();
  IdealPredicates out;
  out.rank = ideal.rank();
  out.inner = out.singular = out.isotropic = true;
  const auto& image = ideal.image_basis();
  for (const auto& u : image)
    for (const auto& v : image) {
      const RationalMatrix pv = g.pi(g.phi(u, v));
      if (!pv.is_zero_matrix()) out.singular = false;
      if (out.inner && !ideal.contains(pv)) out.inner = false;
      // σ(I) I is spanned by σ(u e_j^T) u' e_l^T = b(u, u') G^{-1} E_jl; the
      // j = l = 0 products already detect every nonzero b(u, u').
      const RationalMatrix gu = outer(u, basis_vector<Rational>(n, 0));
      const RationalMatrix gv = outer(v, basis_vector<Rational>(n, 0));
      if (!(g.sigma(gu) * gv).is_zero_matrix()) out.isotropic = false;
    }
  return out;
}

}  // namespace e7
