#include <omp.h>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <unordered_map>

#include "e7/fts.hpp"

namespace e7 {

namespace {

// ------------------------------------------------------------------ F_p polynomials

using ModPoly = std::unordered_map<std::uint32_t, std::uint64_t>;

inline std::uint32_t mono_mul(std::uint32_t a, std::uint32_t b) {
  std::uint8_t buf[8];
  int len = 0;
  for (; a != 0; a >>= 8) buf[len++] = static_cast<std::uint8_t>(a & 0xFFu);
  for (; b != 0; b >>= 8) buf[len++] = static_cast<std::uint8_t>(b & 0xFFu);
  if (len > 4) throw std::overflow_error("monomial degree exceeds 4");
  for (int i = 1; i < len; ++i)
    for (int j = i; j > 0 && buf[j - 1] > buf[j]; --j) std::swap(buf[j - 1], buf[j]);
  std::uint32_t m = 0;
  for (int i = 0; i < len; ++i) m |= static_cast<std::uint32_t>(buf[i]) << (8 * i);
  return m;
}

inline std::uint32_t var(std::size_t v) { return static_cast<std::uint32_t>(v + 1); }

inline void add_term(ModPoly& p, std::uint32_t m, std::uint64_t c, const PrimeField& f) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second == 0) p.erase(it);
  }
}

// out += c * mono * src
inline void add_scaled(ModPoly& out, const ModPoly& src, std::uint64_t c, std::uint32_t mono,
                       const PrimeField& f) {
  if (c == 0) return;
  for (const auto& [m, v] : src) add_term(out, mono_mul(m, mono), f.mul(v, c), f);
}

// out += c * a * b
inline void add_product(ModPoly& out, const ModPoly& a, const ModPoly& b, std::uint64_t c,
                        const PrimeField& f) {
  if (c == 0) return;
  for (const auto& [ma, va] : a)
    for (const auto& [mb, vb] : b) add_term(out, mono_mul(ma, mb), f.mul(c, f.mul(va, vb)), f);
}

std::string describe_monomial(std::uint32_t m, std::size_t n) {
  std::ostringstream os;
  bool first = true;
  for (; m != 0; m >>= 8) {
    const std::size_t v = (m & 0xFFu) - 1;
    os << (first ? "" : "*") << (v < n ? "x" : "y") << (v % n);
    first = false;
  }
  return first ? "1" : os.str();
}

struct ModContext {
  PrimeField f;
  std::size_t n = 0;
  std::vector<ModTensorEntry> entries;
  std::vector<std::vector<std::uint64_t>> g;     // b Gram mod p
  std::vector<std::vector<std::size_t>> by_c;    // entry indices with third index c
};

std::optional<ModContext> make_context(const TripleSystem& ts, std::uint64_t prime) {
  const std::size_t n = ts.dimension();
  if (2 * n >= 255) throw std::invalid_argument("modular checks support dimension < 127");
  ModContext ctx{PrimeField(prime), n, {}, {}, {}};
  auto entries = reduce_tensor(ts.tensor(), ctx.f);
  if (!entries) return std::nullopt;
  ctx.entries = std::move(*entries);
  ctx.g.assign(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = ctx.f.reduce(ts.b_gram()(i, j));
      if (!v) return std::nullopt;
      ctx.g[i][j] = *v;
    }
  ctx.by_c.assign(n, {});
  for (std::size_t k = 0; k < ctx.entries.size(); ++k) ctx.by_c[ctx.entries[k].c].push_back(k);
  return ctx;
}

// Checks a vector of polynomials for zero; fills the witness on failure.
bool all_zero(const std::vector<ModPoly>& polys, std::size_t n, const std::string& where,
              std::string& witness) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].empty()) continue;
    const auto& [m, v] = *std::min_element(polys[i].begin(), polys[i].end());
    witness = where + ", component " + std::to_string(i) + ", monomial " + describe_monomial(m, n) +
              " has coefficient " + std::to_string(v);
    return false;
  }
  return true;
}

// Runs body(k, witness) for k in [0, n) in parallel; stops at the first failure.
template <class Body>
ModularCheck for_each_k(std::size_t n, Body body) {
  ModularCheck result;
  std::atomic<bool> failed{false};
  std::vector<std::string> witnesses(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ik = 0; ik < static_cast<std::int64_t>(n); ++ik) {
    if (failed.load()) continue;
    const auto k = static_cast<std::size_t>(ik);
    if (!body(k, witnesses[k])) failed.store(true);
  }
  if (failed.load()) {
    result.ok = false;
    for (const auto& w : witnesses)
      if (!w.empty()) {
        result.witness = w;
        break;
      }
  }
  return result;
}

// Matrix of p(x⊗x) with x in variables offset..offset+n-1, entry (i, w).
std::vector<ModPoly> p_matrix(const ModContext& ctx, std::size_t offset) {
  const std::size_t n = ctx.n;
  const auto& f = ctx.f;
  std::vector<ModPoly> p(n * n);
  for (const auto& e : ctx.entries)
    add_term(p[e.out * n + e.c], mono_mul(var(offset + e.a), var(offset + e.b)), e.value, f);
  // - 2 b(w, x) x_i
  const std::uint64_t minus_two = f.neg(2);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t j = 0; j < n; ++j) {
      if (ctx.g[w][j] == 0) continue;
      const std::uint64_t c = f.mul(minus_two, ctx.g[w][j]);
      for (std::size_t i = 0; i < n; ++i)
        add_term(p[i * n + w], mono_mul(var(offset + j), var(offset + i)), c, f);
    }
  return p;
}

}  // namespace

ModularCheck exhaustive_fts3_mod_p(const TripleSystem& ts, std::uint64_t prime) {
  auto ctx = make_context(ts, prime);
  if (!ctx) return ModularCheck{true, true, {}};
  const std::size_t n = ctx->n;
  const auto& f = ctx->f;
  std::vector<ModPoly> cubic(n);  // t(x, x, x)
  for (const auto& e : ctx->entries)
    add_term(cubic[e.out], mono_mul(mono_mul(var(e.a), var(e.b)), var(e.c)), e.value, f);
  return for_each_k(n, [&](std::size_t k, std::string& witness) {
    std::vector<ModPoly> lhs(n);
    // t(t(x,x,x), x, e_k)
    for (std::size_t idx : ctx->by_c[k]) {
      const auto& e = ctx->entries[idx];
      add_scaled(lhs[e.out], cubic[e.a], e.value, var(e.b), f);
    }
    // - b(e_k, x) t(x,x,x)
    for (std::size_t j = 0; j < n; ++j) {
      if (ctx->g[k][j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i) add_scaled(lhs[i], cubic[i], f.neg(ctx->g[k][j]), var(j), f);
    }
    // - q(e_k, x, x, x) x = - b(e_k, t(x,x,x)) x
    ModPoly qk;
    for (std::size_t a = 0; a < n; ++a)
      if (ctx->g[k][a] != 0) add_scaled(qk, cubic[a], ctx->g[k][a], 0, f);
    for (std::size_t i = 0; i < n; ++i) add_scaled(lhs[i], qk, f.neg(1), var(i), f);
    return all_zero(lhs, n, "y = e_" + std::to_string(k), witness);
  });
}

ModularCheck exhaustive_fts3_prime_mod_p(const TripleSystem& ts, std::uint64_t prime) {
  auto ctx = make_context(ts, prime);
  if (!ctx) return ModularCheck{true, true, {}};
  const std::size_t n = ctx->n;
  const auto& f = ctx->f;
  // x in variables 0..n-1, z in n..2n-1.
  std::vector<ModPoly> a_xxz(n), b_xzz(n);
  for (const auto& e : ctx->entries) {
    add_term(a_xxz[e.out], mono_mul(mono_mul(var(e.a), var(e.b)), var(n + e.c)), e.value, f);
    add_term(b_xzz[e.out], mono_mul(mono_mul(var(e.a), var(n + e.b)), var(n + e.c)), e.value, f);
  }
  return for_each_k(n, [&](std::size_t k, std::string& witness) {
    std::vector<ModPoly> lhs(n);
    std::vector<ModPoly> l_xz(n), m_zz(n);  // t(x, z, e_k), t(z, z, e_k)
    for (std::size_t idx : ctx->by_c[k]) {
      const auto& e = ctx->entries[idx];
      add_scaled(lhs[e.out], a_xxz[e.a], e.value, var(n + e.b), f);  // t(t(x,x,z), z, y)
      add_scaled(lhs[e.out], b_xzz[e.a], e.value, var(e.b), f);      // t(t(x,z,z), x, y)
      add_term(l_xz[e.out], mono_mul(var(e.a), var(n + e.b)), e.value, f);
      add_term(m_zz[e.out], mono_mul(var(n + e.a), var(n + e.b)), e.value, f);
    }
    // q(x, x, z, y) = b(x, t(x, z, y)), q(x, z, z, y) = b(x, t(z, z, y))
    ModPoly q1, q2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (ctx->g[i][j] == 0) continue;
        add_scaled(q1, l_xz[j], ctx->g[i][j], var(i), f);
        add_scaled(q2, m_zz[j], ctx->g[i][j], var(i), f);
      }
    const std::uint64_t minus_one = f.neg(1);
    for (std::size_t i = 0; i < n; ++i) {
      add_scaled(lhs[i], q1, minus_one, var(n + i), f);  // - z q(x,x,z,y)
      add_scaled(lhs[i], q2, minus_one, var(i), f);      // - x q(x,z,z,y)
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (ctx->g[k][j] == 0) continue;
      const std::uint64_t c = f.neg(ctx->g[k][j]);
      for (std::size_t i = 0; i < n; ++i) {
        add_scaled(lhs[i], a_xxz[i], c, var(n + j), f);  // - b(y, z) t(x,x,z)
        add_scaled(lhs[i], b_xzz[i], c, var(j), f);      // - b(y, x) t(x,z,z)
      }
    }
    return all_zero(lhs, n, "y = e_" + std::to_string(k), witness);
  });
}

ModularCheck exhaustive_badtrid_mod_p(const TripleSystem& ts, std::uint64_t prime) {
  auto ctx = make_context(ts, prime);
  if (!ctx) return ModularCheck{true, true, {}};
  const std::size_t n = ctx->n;
  const auto& f = ctx->f;
  const auto p = p_matrix(*ctx, 0);
  std::vector<ModPoly> diff(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t w = 0; w < n; ++w) add_product(diff[0], p[i * n + w], p[w * n + i], 1, f);
  std::vector<ModPoly> cubic(n);
  for (const auto& e : ctx->entries)
    add_term(cubic[e.out], mono_mul(mono_mul(var(e.a), var(e.b)), var(e.c)), e.value, f);
  const std::uint64_t minus_24 = f.neg(24);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (ctx->g[i][j] != 0) add_scaled(diff[0], cubic[j], f.mul(minus_24, ctx->g[i][j]), var(i), f);
  ModularCheck r;
  r.ok = all_zero(diff, n, "tr(p(x⊗x)²) - 24 q(x,x,x,x)", r.witness);
  return r;
}

ModularCheck exhaustive_trace_identity_mod_p(const TripleSystem& ts, std::uint64_t prime) {
  auto ctx = make_context(ts, prime);
  if (!ctx) return ModularCheck{true, true, {}};
  const std::size_t n = ctx->n;
  const auto& f = ctx->f;
  const auto px = p_matrix(*ctx, 0);
  const auto py = p_matrix(*ctx, n);
  std::vector<ModPoly> diff(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t w = 0; w < n; ++w) add_product(diff[0], px[i * n + w], py[w * n + i], 1, f);
  // - 24 q(x, x, y, y) = - 24 b(x, t(x, y, y))
  std::vector<ModPoly> t_xyy(n);
  for (const auto& e : ctx->entries)
    add_term(t_xyy[e.out], mono_mul(mono_mul(var(e.a), var(n + e.b)), var(n + e.c)), e.value, f);
  const std::uint64_t minus_24 = f.neg(24);
  ModPoly byx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (ctx->g[i][j] == 0) continue;
      add_scaled(diff[0], t_xyy[j], f.mul(minus_24, ctx->g[i][j]), var(i), f);
      add_term(byx, mono_mul(var(n + i), var(j)), ctx->g[i][j], f);
    }
  // + 48 b(y, x)²
  add_product(diff[0], byx, byx, 48, f);
  ModularCheck r;
  r.ok = all_zero(diff, n, "tr(p(x⊗x)p(y⊗y)) - 24(q(x,x,y,y) - 2b(y,x)²)", r.witness);
  return r;
}

std::optional<std::array<std::size_t, 4>> find_fts1_violation(const TripleSystem& ts) {
  const std::size_t n = ts.dimension();
  if (n >= 256) throw std::invalid_argument("FTS1 check supports dimension < 256");
  auto key = [](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return static_cast<std::uint32_t>(a | (b << 8) | (c << 16) | (d << 24));
  };
  // q(e_a, e_b, e_c, e_d) = Σ_i G(a, i) t(e_b, e_c, e_d)_i
  std::vector<std::vector<std::pair<std::size_t, Rational>>> gcol(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      if (ts.b_gram()(a, i) != 0) gcol[i].emplace_back(a, ts.b_gram()(a, i));
  std::unordered_map<std::uint32_t, Rational> q;
  for (const auto& e : ts.tensor().entries())
    for (const auto& [a, g] : gcol[e.out]) {
      auto& v = q[key(a, e.a, e.b, e.c)];
      v += g * e.value;
    }
  for (const auto& [k, v] : q) {
    if (v == 0) continue;
    std::array<std::size_t, 4> idx{k & 0xFFu, (k >> 8) & 0xFFu, (k >> 16) & 0xFFu, k >> 24};
    std::array<std::size_t, 4> perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
      auto it = q.find(key(perm[0], perm[1], perm[2], perm[3]));
      const Rational other = it == q.end() ? Rational(0) : it->second;
      if (other != v) return idx;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ sampled checks

namespace {

constexpr std::uint64_t kStreamFts2 = 1ull << 32;
constexpr std::uint64_t kStreamFts3 = 2ull << 32;
constexpr std::uint64_t kStreamFts3p = 3ull << 32;
constexpr std::uint64_t kStreamBadtrid = 4ull << 32;
constexpr std::uint64_t kStreamClassify = 5ull << 32;
constexpr std::uint64_t kStreamTrform = 6ull << 32;

using ModularFn = ModularCheck (*)(const TripleSystem&, std::uint64_t);

// Runs the modular layer; returns false and sets the result on failure.
bool run_modular(const TripleSystem& ts, const Budget& budget, ModularFn fn, CheckResult& r) {
  if (!budget.exhaustive) return true;
  std::size_t used = 0;
  std::vector<std::string> skipped;
  for (std::uint64_t p : random_primes(budget.primes, budget.seed)) {
    const ModularCheck m = fn(ts, p);
    if (m.skipped) {
      skipped.push_back(std::to_string(p));
      continue;
    }
    ++used;
    if (!m.ok) {
      r.status = Status::fail;
      r.witness = Json{{"prime", std::to_string(p)}, {"location", m.witness}};
      r.detail = "exhaustive polynomial identity fails modulo p";
      r.evidence.primes = used;
      r.evidence.exhaustive = true;
      return false;
    }
  }
  r.evidence.primes = used;
  r.evidence.exhaustive = used > 0;
  if (!skipped.empty()) r.detail += "; skipped primes dividing denominators";
  return true;
}

}  // namespace

std::vector<CheckResult> check_axioms(const TripleSystem& ts, const Budget& budget) {
  const std::size_t n = ts.dimension();
  std::vector<CheckResult> out;

  {
    CheckResult r;
    r.name = "FTS1";
    r.evidence.exhaustive = true;
    if (auto v = find_fts1_violation(ts)) {
      r.status = Status::fail;
      r.witness = Json{(*v)[0], (*v)[1], (*v)[2], (*v)[3]};
      r.detail = "q(e_a, e_b, e_c, e_d) is not symmetric at this basis tuple";
    } else {
      r.detail = "q symmetric on all basis 4-tuples";
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "FTS2";
    r.status = Status::inconclusive;
    r.detail = "no x with q(x,x,x,x) != 0 found";
    for (std::size_t s = 0; s < budget.samples; ++s) {
      auto rng = sample_rng(budget.seed, kStreamFts2 + s);
      const auto x = random_rational_vector(rng, n);
      const Rational q = ts.quartic(x);
      r.evidence.samples = s + 1;
      if (q != 0) {
        r.status = Status::pass;
        r.witness = Json{{"x", witness_vector(x)}, {"q", witness_scalar(q)}};
        r.detail = "q(x,x,x,x) != 0 at the witness";
        break;
      }
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "FTS3";
    r.detail = "t(t(x,x,x),x,y) = b(y,x) t(x,x,x) + q(y,x,x,x) x";
    for (std::size_t s = 0; s < budget.samples && r.passed(); ++s) {
      auto rng = sample_rng(budget.seed, kStreamFts3 + s);
      const auto x = random_rational_vector(rng, n);
      const auto y = random_rational_vector(rng, n);
      const auto txxx = ts.t(x, x, x);
      const auto lhs = ts.t(txxx, x, y);
      const auto rhs = scaled(ts.b(y, x), txxx) + scaled(ts.b(y, txxx), x);
      r.evidence.samples = s + 1;
      if (lhs != rhs) {
        r.status = Status::fail;
        r.witness = Json{{"x", witness_vector(x)}, {"y", witness_vector(y)}};
      }
    }
    if (r.passed()) run_modular(ts, budget, exhaustive_fts3_mod_p, r);
    out.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "FTS3'";
    r.detail = "linearized FTS3 (coefficient of lambda² at x + lambda z)";
    for (std::size_t s = 0; s < budget.samples && r.passed(); ++s) {
      auto rng = sample_rng(budget.seed, kStreamFts3p + s);
      const auto x = random_rational_vector(rng, n);
      const auto y = random_rational_vector(rng, n);
      const auto z = random_rational_vector(rng, n);
      const auto txxz = ts.t(x, x, z);
      const auto txzz = ts.t(x, z, z);
      const auto lhs = ts.t(txxz, z, y) + ts.t(txzz, x, y);
      const auto rhs = scaled(ts.b(x, ts.t(x, z, y)), z) + scaled(ts.b(x, ts.t(z, z, y)), x) +
                       scaled(ts.b(y, z), txxz) + scaled(ts.b(y, x), txzz);
      r.evidence.samples = s + 1;
      if (lhs != rhs) {
        r.status = Status::fail;
        r.witness = Json{{"x", witness_vector(x)}, {"y", witness_vector(y)}, {"z", witness_vector(z)}};
      }
    }
    if (r.passed()) run_modular(ts, budget, exhaustive_fts3_prime_mod_p, r);
    out.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "badtrid";
    r.detail = "tr(p(x⊗x)²) = 24 q(x,x,x,x)";
    for (std::size_t s = 0; s < budget.samples && r.passed(); ++s) {
      auto rng = sample_rng(budget.seed, kStreamBadtrid + s);
      const auto x = random_rational_vector(rng, n);
      const auto px = p_map(ts, x, x);
      const Rational lhs = trace_of_product(px, px);
      const Rational rhs = 24 * ts.quartic(x);
      r.evidence.samples = s + 1;
      if (lhs != rhs) {
        r.status = Status::fail;
        r.witness = Json{{"x", witness_vector(x)},
                         {"trace", witness_scalar(lhs)},
                         {"24q", witness_scalar(rhs)}};
      }
    }
    if (r.passed()) run_modular(ts, budget, exhaustive_badtrid_mod_p, r);
    out.push_back(std::move(r));
  }
  return out;
}

Classification classify(const TripleSystem& ts, const Budget& budget) {
  const std::size_t n = ts.dimension();
  Classification c;
  CheckResult& r = c.evidence;
  r.name = "trace_identity";
  auto degenerate = [&](const RationalVector& x, const RationalVector& y, const Rational& res,
                        const std::string& how) {
    c.degenerate = true;
    c.residual = res;
    r.status = Status::fail;
    r.witness = Json{{"x", witness_vector(x)}, {"y", witness_vector(y)}, {"residual", witness_scalar(res)}};
    r.detail = how;
  };

  const auto& prov = ts.provenance();
  if (prov.w_dim > 0 && prov.kind == SystemKind::ms) {
    const auto [x, y] = ms_structured_witness(ts);
    const Rational res = trace_identity_residual(ts, x, y);
    if (res != 0) {
      degenerate(x, y, res, "structured witness: isotropic j-parts, s(j,j') = s(k,k') = 1");
      return c;
    }
  }
  for (std::size_t s = 0; s < budget.samples; ++s) {
    auto rng = sample_rng(budget.seed, kStreamClassify + s);
    const auto x = random_rational_vector(rng, n);
    const auto y = random_rational_vector(rng, n);
    const Rational res = trace_identity_residual(ts, x, y);
    r.evidence.samples = s + 1;
    if (res != 0) {
      degenerate(x, y, res, "random pair violates the trace identity");
      return c;
    }
  }
  if (!run_modular(ts, budget, exhaustive_trace_identity_mod_p, r)) {
    c.degenerate = true;
    return c;
  }
  r.detail = "trace identity holds on all sampled pairs";
  if (r.evidence.exhaustive) r.detail += " and as a polynomial identity modulo each prime";
  return c;
}

CheckResult check_ms_trace_form(const TripleSystem& ts, const Budget& budget) {
  CheckResult r;
  r.name = "trform";
  r.detail = "(1/8) tr(p(x⊗x)p(y⊗y)) = 3q(x,x,y,y) - b(y,x)² + (dim W - 7) det(x)det(y) - 5 det(x,y)²";
  for (std::size_t s = 0; s < budget.samples; ++s) {
    auto rng = sample_rng(budget.seed, kStreamTrform + s);
    const auto x = random_rational_vector(rng, ts.dimension());
    const auto y = random_rational_vector(rng, ts.dimension());
    const MsDiagnostics d = ms_diagnostics(ts, x, y);
    r.evidence.samples = s + 1;
    if (!d.trform_check) {
      r.status = Status::fail;
      r.witness = Json{{"x", witness_vector(x)},
                       {"y", witness_vector(y)},
                       {"lhs", witness_scalar(d.trace_eighth)},
                       {"rhs", witness_scalar(d.trform_rhs)}};
      break;
    }
  }
  return r;
}

}  // namespace e7
