#include "e7/descent.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "e7/brown.hpp"

namespace e7 {

namespace {

using QMatrix = Matrix<QuadExt>;

/// Basis element q ⊗ E_rs of Q ⊗ M_n(F), q in {1, i, j, k = ij}.
struct QBasis {
  int q;
  std::size_t r, s;
};

/// q1 q2 = coeff · q3 in (alpha, beta)_F.
std::pair<Rational, int> quaternion_product(int q1, int q2, const Rational& alpha, const Rational& beta) {
  if (q1 == 0) return {1, q2};
  if (q2 == 0) return {1, q1};
  static constexpr std::array<std::array<int, 3>, 3> target{{{0, 3, 2}, {3, 0, 1}, {2, 1, 0}}};
  const int t = target[q1 - 1][q2 - 1];
  Rational c;
  switch (q1 * 4 + q2) {
    case 1 * 4 + 1: c = alpha; break;          // i i
    case 1 * 4 + 2: c = 1; break;              // i j = k
    case 1 * 4 + 3: c = alpha; break;          // i k = alpha j
    case 2 * 4 + 1: c = -1; break;             // j i = -k
    case 2 * 4 + 2: c = beta; break;           // j j
    case 2 * 4 + 3: c = -beta; break;          // j k = -beta i
    case 3 * 4 + 1: c = -alpha; break;         // k i = -alpha j
    case 3 * 4 + 2: c = beta; break;           // k j = beta i
    default: c = -alpha * beta; break;         // k k
  }
  return {c, t};
}

QMatrix place_block(std::size_t n, std::size_t r, std::size_t s, const std::array<QuadExt, 4>& block) {
  QMatrix m(2 * n, 2 * n);
  m(2 * r, 2 * s) = block[0];
  m(2 * r, 2 * s + 1) = block[1];
  m(2 * r + 1, 2 * s) = block[2];
  m(2 * r + 1, 2 * s + 1) = block[3];
  return m;
}

QMatrix block_diagonal(std::size_t n, const std::vector<std::array<QuadExt, 4>>& blocks) {
  QMatrix m(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) m += place_block(n, r, r, blocks[r]);
  return m;
}

}  // namespace

SymplemReport symplem_verify(const SymplemParams& p) {
  const std::size_t n = p.a.size();
  if (n == 0 || p.c.size() != n) throw std::invalid_argument("symplem needs matching nonempty a and c");
  if (p.beta == 0) throw std::invalid_argument("beta must be nonzero");
  for (std::size_t r = 0; r < n; ++r)
    if (p.a[r] == 0 || p.c[r] == 0) throw std::invalid_argument("a_i and c_i must be nonzero");
  const QuadFieldPtr field = make_quad_field(p.alpha);
  const QuadExt root = QuadExt::root(field);
  const Rational& beta = p.beta;
  const auto& c = p.c;

  // gf on generators: 1 ⊗ E_rs, i ⊗ 1, j ⊗ E_rs; i ⊗ E_rs and k ⊗ E_rs are
  // the products (i ⊗ 1)(q ⊗ E_rs).
  std::vector<std::array<QuadExt, 4>> i_blocks(n, {root, QuadExt(0), QuadExt(0), -root});
  const QMatrix gf_i = block_diagonal(n, i_blocks);
  auto gf = [&](const QBasis& x) {
    QMatrix base;
    if (x.q == 0 || x.q == 1)
      base = place_block(n, x.r, x.s, {QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(c[x.s] / c[x.r])});
    else
      base = place_block(n, x.r, x.s, {QuadExt(0), QuadExt(c[x.s]), QuadExt(beta / c[x.r]), QuadExt(0)});
    return (x.q == 1 || x.q == 3) ? gf_i * base : base;
  };
  std::vector<QBasis> basis;
  for (int q = 0; q < 4; ++q)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) basis.push_back({q, r, s});
  std::vector<QMatrix> images;
  for (const auto& x : basis) images.push_back(gf(x));
  auto image_of = [&](int q, std::size_t r, std::size_t s) -> const QMatrix& {
    return images[(static_cast<std::size_t>(q) * n + r) * n + s];
  };

  std::vector<CheckResult> checks;
  auto fail = [](CheckResult& r, Json witness) {
    r.status = Status::fail;
    r.witness = std::move(witness);
  };
  auto basis_json = [](const QBasis& x) { return Json::array({x.q, x.r, x.s}); };

  {
    CheckResult r;
    r.name = "homomorphism";
    r.detail = "gf(x) gf(y) = gf(xy) on all basis pairs of Q ⊗ M_n(F), gf(1) = 1";
    r.evidence.exhaustive = true;
    QMatrix unit(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) unit += image_of(0, k, k);
    if (unit != QMatrix::identity(2 * n)) fail(r, Json{{"x", "unit"}});
    for (const auto& x : basis) {
      if (!r.passed()) break;
      for (const auto& y : basis) {
        QMatrix expected(2 * n, 2 * n);
        if (x.s == y.r) {
          const auto [coeff, q] = quaternion_product(x.q, y.q, p.alpha, beta);
          expected = QuadExt(coeff) * image_of(q, x.r, y.s);
        }
        if (image_of(x.q, x.r, x.s) * image_of(y.q, y.r, y.s) != expected) {
          fail(r, Json{{"x", basis_json(x)}, {"y", basis_json(y)}});
          break;
        }
      }
    }
    checks.push_back(std::move(r));
  }

  std::vector<std::array<QuadExt, 4>> m_blocks, m_inv_blocks;
  for (std::size_t k = 0; k < n; ++k) {
    m_blocks.push_back({QuadExt(0), QuadExt(c[k]), QuadExt(beta / c[k]), QuadExt(0)});
    m_inv_blocks.push_back({QuadExt(0), QuadExt(c[k] / beta), QuadExt(1 / c[k]), QuadExt(0)});
  }
  const QMatrix m = block_diagonal(n, m_blocks);
  const QMatrix m_inv = block_diagonal(n, m_inv_blocks);
  {
    CheckResult r;
    r.name = "fixed";
    r.detail = "m ι(gf(x)) m^-1 = gf(x) on every basis element";
    r.evidence.exhaustive = true;
    if (m * m_inv != QMatrix::identity(2 * n)) fail(r, Json{{"x", "m inverse"}});
    for (std::size_t k = 0; k < basis.size() && r.passed(); ++k)
      if (m * conj(images[k]) * m_inv != images[k]) fail(r, Json{{"x", basis_json(basis[k])}});
    checks.push_back(std::move(r));
  }

  // θ = gf (γ ⊗ id ⊗ t) (gf)^-1 on images: γ negates i, j, k.
  auto theta_of = [&](const QBasis& x) {
    const QMatrix& img = image_of(x.q, x.s, x.r);
    return x.q == 0 ? img : -img;
  };
  std::vector<std::array<QuadExt, 4>> dc_blocks, dc_inv_blocks, a_blocks, a_inv_blocks, j_blocks,
      j_inv_blocks, h_blocks, h_inv_blocks;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational ci = 1 / c[k];
    dc_blocks.push_back({QuadExt(0), QuadExt(ci), QuadExt(-ci), QuadExt(0)});
    dc_inv_blocks.push_back({QuadExt(0), QuadExt(-c[k]), QuadExt(c[k]), QuadExt(0)});
    const QuadExt ak = p.a[k] * root;
    const QuadExt ak_inv = ak.inverse();
    a_blocks.push_back({ak, QuadExt(0), QuadExt(0), ak});
    a_inv_blocks.push_back({ak_inv, QuadExt(0), QuadExt(0), ak_inv});
    j_blocks.push_back({QuadExt(0), QuadExt(1), QuadExt(-1), QuadExt(0)});
    j_inv_blocks.push_back({QuadExt(0), QuadExt(-1), QuadExt(1), QuadExt(0)});
    const QuadExt hk = c[k] * ak_inv;
    h_blocks.push_back({hk, QuadExt(0), QuadExt(0), hk});
    h_inv_blocks.push_back({hk.inverse(), QuadExt(0), QuadExt(0), hk.inverse()});
  }
  const QMatrix dc = block_diagonal(n, dc_blocks), dc_inv = block_diagonal(n, dc_inv_blocks);
  const QMatrix ad = block_diagonal(n, a_blocks), ad_inv = block_diagonal(n, a_inv_blocks);
  const QMatrix jd = block_diagonal(n, j_blocks), jd_inv = block_diagonal(n, j_inv_blocks);
  const QMatrix h = block_diagonal(n, h_blocks), h_inv = block_diagonal(n, h_inv_blocks);
  auto tau = [&](const QMatrix& x) { return ad_inv * (jd * x.transpose() * jd_inv) * ad; };
  {
    CheckResult r;
    r.name = "involution transpose display";
    r.detail = "gf (γ ⊗ id ⊗ t) gf^-1 = Int(diag(c_i^-1 J)) ∘ t on the image";
    r.evidence.exhaustive = true;
    for (std::size_t k = 0; k < basis.size() && r.passed(); ++k)
      if (theta_of(basis[k]) != dc * images[k].transpose() * dc_inv) fail(r, Json{{"x", basis_json(basis[k])}});
    checks.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.name = "involution adjoint display";
    r.detail = "τ ∘ θ = Int(diag(c_i A_i^-1)) with τ adjoint to the skew form ⊕ s_i";
    r.evidence.exhaustive = true;
    for (std::size_t k = 0; k < basis.size() && r.passed(); ++k)
      if (tau(theta_of(basis[k])) != h * images[k] * h_inv) fail(r, Json{{"x", basis_json(basis[k])}});
    checks.push_back(std::move(r));
  }
  RationalVector coeffs(n);
  {
    CheckResult r;
    r.name = "hermitian coefficients";
    r.detail = "(gf)^-1(c_i A_i^-1) = c_i (√α a_i)^-1 = (c_i a_i) / (√α a_i²)";
    r.evidence.exhaustive = true;
    for (std::size_t k = 0; k < n; ++k) {
      // The scalar block of h at position k, rescaled by √α a_k².
      const QuadExt scaled = h(2 * k, 2 * k) * root * QuadExt(p.a[k] * p.a[k]);
      if (!scaled.is_rational() || scaled.u() != c[k] * p.a[k] || h(2 * k + 1, 2 * k + 1) != h(2 * k, 2 * k))
        fail(r, Json{{"block", k}});
      coeffs[k] = scaled.u();
    }
    checks.push_back(std::move(r));
  }
  return SymplemReport{std::move(checks), HermitianForm(p.alpha, p.beta, coeffs)};
}

SymplemParams random_symplem_params(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static const std::array<int, 6> non_squares{-1, -2, -3, 2, 3, 5};
  std::uniform_int_distribution<std::size_t> pick(0, non_squares.size() - 1);
  SymplemParams p;
  p.alpha = non_squares[pick(rng)];
  p.beta = random_nonzero_rational(rng, 7, 3);
  for (std::size_t k = 0; k < n; ++k) {
    p.a.push_back(random_nonzero_rational(rng, 7, 3));
    p.c.push_back(random_nonzero_rational(rng, 7, 3));
  }
  return p;
}

// ---------------------------------------------------------------- construction

RationalMatrix quatconst_similarity(const Rational& b) {
  if (b == 0) throw std::invalid_argument("the multiplier b must be nonzero");
  constexpr std::size_t n = BrownAlgebra::kDim;
  RationalMatrix t(n, n);
  t(BrownAlgebra::kAlpha, BrownAlgebra::kAlpha) = 1 / b;
  for (std::size_t k = 0; k < AlbertAlgebra::kDim; ++k) {
    t(BrownAlgebra::j_index(k), BrownAlgebra::j_index(k)) = b;
    t(BrownAlgebra::jp_index(k), BrownAlgebra::jp_index(k)) = 1;
  }
  t(BrownAlgebra::kBeta, BrownAlgebra::kBeta) = b * b;
  return t;
}

RationalMatrix quatconst_twist(const Rational& b) {
  return quatconst_similarity(b) * BrownAlgebra::varpi_matrix();
}

QuatConstResult quatconst_build(const Rational& a, const Rational& b) {
  if (b == 0) throw std::invalid_argument("the multiplier b must be nonzero");
  const QuadFieldPtr field = make_quad_field(a);
  const auto J = std::make_shared<const AlbertAlgebra>(AlbertAlgebra::split());
  const auto system = std::make_shared<const TripleSystem>(build_albert(J));
  constexpr std::size_t n = BrownAlgebra::kDim;
  const RationalMatrix t = quatconst_similarity(b);
  const RationalMatrix varpi = BrownAlgebra::varpi_matrix();
  const RationalMatrix twist = t * varpi;
  const RationalMatrix twist_inv = inverse(twist);

  std::vector<CheckResult> checks;
  checks.push_back(check_similarity(*system, t, b, "similarity"));
  // ϖ has multiplier -1 on b, so it preserves s = √a b once combined with ι.
  checks.push_back(check_similarity(*system, varpi, Rational(-1), "varpi ⊗ iota preserves s"));
  {
    CheckResult r;
    r.name = "cocycle";
    r.detail = "t ι t ι (x) = b x on every basis vector";
    r.evidence.exhaustive = true;
    // ι fixes rational matrices, so t ι t ι = (t ϖ)(t ϖ) as a matrix.
    const RationalMatrix square = twist * twist;
    for (std::size_t i = 0; i < n && r.passed(); ++i)
      if (square.col(i) != scaled(b, basis_vector<Rational>(n, i))) {
        r.status = Status::fail;
        r.witness = Json{{"basis_index", i}};
      }
    checks.push_back(std::move(r));
  }

  // M e_d = m_d e_{π(d)}: the twisted action sends λ E_cd to
  // ι(λ) (m_c / m_d) E_{π(c) π(d)}.
  std::vector<std::size_t> perm(n);
  RationalVector mult(n);
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t r = 0; r < n; ++r)
      if (twist(r, d) != 0) {
        perm[d] = r;
        mult[d] = twist(r, d);
      }
  GiftDescent descent{field, twist, twist_inv, {}};
  const QuadExt root = QuadExt::root(field);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      const std::size_t pc = perm[c], pd = perm[d];
      if (c * n + d >= pc * n + pd) continue;
      for (const QuadExt& lambda : {QuadExt(1), root}) {
        SparseQuadMatrix element;
        element.emplace_back(c, d, lambda);
        element.emplace_back(pc, pd, conj(lambda) * QuadExt(mult[c] / mult[d]));
        descent.basis.push_back(std::move(element));
      }
    }
  Gift gift(system, "descended(a=" + to_fraction_string(a) + ", b=" + to_fraction_string(b) + ")",
            std::move(descent));
  {
    CheckResult r;
    r.name = "fixed dimension";
    r.detail = "the fixed algebra has an F-basis of 3136 elements, each fixed by the twisted action";
    r.evidence.exhaustive = true;
    SparseEchelon echelon;
    const auto& basis = gift.descent()->basis;
    for (const auto& element : basis) {
      SparseRow row;
      for (const auto& [rr, cc, v] : element) {
        const std::size_t idx = rr * n + cc;
        if (v.u() != 0) row.emplace_back(idx, v.u());
        if (v.v() != 0) row.emplace_back(n * n + idx, v.v());
      }
      std::sort(row.begin(), row.end());
      echelon.insert(std::move(row));
    }
    bool all_fixed = true;
    for (std::size_t k = 0; k < basis.size() && all_fixed; k += 97)
      all_fixed = gift.contains(gift.densify(basis[k]));
    r.witness = Json{{"basis_size", basis.size()}, {"rank", echelon.rank()}};
    if (basis.size() != n * n || echelon.rank() != n * n || !all_fixed) r.status = Status::fail;
    checks.push_back(std::move(r));
  }

  // Form-level part: s comes from <1> with c = b^{-1} and from T with c = b,
  // so σ is adjoint to <b^{-1}> ⊥ <b> T, similar to <1> ⊥ T.
  RationalVector qa{Rational(1)};
  const QuadraticForm trace = trace_form(*J);
  for (const auto& v : trace.coefficients()) qa.push_back(v);
  RationalVector qc(qa.size(), b);
  qc[0] = 1 / b;
  RationalVector coeffs(qa.size());
  for (std::size_t k = 0; k < qa.size(); ++k) coeffs[k] = qc[k] * qa[k];
  HermitianForm hermitian(a, b, coeffs);
  {
    CheckResult r;
    r.name = "hermitian form";
    r.detail = "<c_i a_i> = <b>(<1> ⊥ T) up to squares; descent matrices verified on <1> and two T entries";
    const SymplemReport small = symplem_verify({a, b, {qa[0], qa[1], qa[4]}, {qc[0], qc[1], qc[4]}});
    if (!small.passed()) {
      r.status = Status::fail;
      r.witness = Json{{"symplem", "failed"}};
    }
    for (std::size_t k = 0; k < qa.size() && r.passed(); ++k) {
      const Rational ratio = coeffs[k] / (b * qa[k]);
      if (!is_rational_square(ratio)) {
        r.status = Status::fail;
        r.witness = Json{{"index", k}, {"ratio", witness_scalar(ratio)}};
      }
    }
    checks.push_back(std::move(r));
  }
  return QuatConstResult{std::move(gift), std::move(checks), std::move(hermitian)};
}

std::vector<CheckResult> quatconst_check(const QuatConstResult& built, const Budget& budget) {
  std::vector<CheckResult> out = check_involution(built.gift, budget);
  for (auto& r : check_gift_axioms(built.gift, budget)) out.push_back(std::move(r));
  return out;
}

}  // namespace e7
