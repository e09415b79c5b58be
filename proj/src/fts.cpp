#include "e7/fts.hpp"

#include <algorithm>

#include "e7/rank.hpp"

namespace e7 {

std::string to_string(SystemKind k) {
  switch (k) {
    case SystemKind::ms:
      return "ms";
    case SystemKind::albert:
      return "albert";
    case SystemKind::scaled:
      return "scaled";
    case SystemKind::from_gift:
      return "from_gift";
    case SystemKind::custom:
      return "custom";
  }
  return "unknown";
}

TripleSystem::TripleSystem(RationalMatrix b_gram, TrilinearTensor t, Provenance provenance)
    : gram_(std::move(b_gram)), t_(std::move(t)), provenance_(std::move(provenance)) {
  if (!gram_.is_square()) throw std::invalid_argument("b Gram matrix must be square");
  if (t_.dimension() != gram_.rows())
    throw std::invalid_argument("tensor and form dimensions differ");
  if (gram_ != -gram_.transpose()) throw std::invalid_argument("b is not skew-symmetric");
  try {
    form_.emplace(gram_);
  } catch (const std::domain_error&) {
    form_.reset();
  }
}

const RationalSkewForm& TripleSystem::b_form() const {
  if (!form_) throw std::domain_error("b is degenerate");
  return *form_;
}

std::vector<std::string> TripleSystem::basis_labels() const {
  const std::size_t n = dimension();
  std::vector<std::string> labels;
  labels.reserve(n);
  const bool structured = provenance_.kind == SystemKind::ms ||
                          provenance_.kind == SystemKind::albert || n % 2 == 0;
  if (structured && n >= 2) {
    const std::size_t m = (n - 2) / 2;
    labels.emplace_back("alpha");
    for (std::size_t i = 0; i < m; ++i) labels.push_back("j[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < m; ++i) labels.push_back("j'[" + std::to_string(i) + "]");
    labels.emplace_back("beta");
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e[" + std::to_string(i) + "]");
  }
  return labels;
}

QuarticValues symmetric_quartic_values(const Poly& quartic) {
  if (!quartic.is_homogeneous(4)) throw std::invalid_argument("quartic must be homogeneous of degree 4");
  QuarticValues values;
  values.reserve(quartic.size());
  for (const auto& [m, c] : quartic.terms())
    values.emplace(m, c / static_cast<long>(monomial_orderings(m)));
  return values;
}

TripleSystem build_from_quartic(const RationalMatrix& b_gram, const Poly& quartic,
                                Provenance provenance) {
  const std::size_t n = b_gram.rows();
  const RationalMatrix ginv = inverse(b_gram);
  // Sparse columns of G^{-1}.
  std::vector<std::vector<std::pair<std::uint16_t, Rational>>> gcol(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      if (ginv(i, a) != 0) gcol[a].emplace_back(static_cast<std::uint16_t>(i), ginv(i, a));

  std::vector<TensorEntry> entries;
  for (const auto& [m, v] : symmetric_quartic_values(quartic)) {
    const auto vars = monomial_variables(m);
    for (std::size_t slot = 0; slot < 4; ++slot) {
      if (slot > 0 && vars[slot] == vars[slot - 1]) continue;
      const std::size_t a = vars[slot];
      std::array<std::size_t, 3> rest{};
      for (std::size_t k = 0, r = 0; k < 4; ++k)
        if (k != slot) rest[r++] = vars[k];
      do {
        for (const auto& [i, g] : gcol[a])
          entries.push_back({static_cast<std::uint16_t>(rest[0]), static_cast<std::uint16_t>(rest[1]),
                             static_cast<std::uint16_t>(rest[2]), i, g * v});
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return TripleSystem(b_gram, TrilinearTensor(n, std::move(entries)), std::move(provenance));
}

// ---------------------------------------------------------------- ms

RationalMatrix ms_standard_s(std::size_t w_dim) {
  if (w_dim < 2) throw std::invalid_argument("W must have dimension at least 2");
  const std::size_t half = w_dim / 2;
  RationalMatrix s(w_dim, w_dim);
  for (std::size_t i = 0; i < half; ++i) {
    s(i, i + half) = 1;
    s(i + half, i) = -1;
  }
  return s;
}

namespace {

void require_skew(const RationalMatrix& s) {
  if (!s.is_square()) throw std::invalid_argument("s must be square");
  if (s != -s.transpose()) throw std::invalid_argument("s is not skew-symmetric");
}

RationalMatrix ms_b_gram(const RationalMatrix& s) {
  const std::size_t m = s.rows();
  const std::size_t n = 2 * m + 2;
  RationalMatrix g(n, n);
  g(0, n - 1) = 1;
  g(n - 1, 0) = -1;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      if (s(r, c) == 0) continue;
      g(1 + r, 1 + m + c) = s(r, c);
      g(1 + m + r, 1 + c) = s(r, c);
    }
  return g;
}

// det(x) = (1/2) x^T H x.
RationalMatrix ms_det_polar(const RationalMatrix& s) {
  const std::size_t m = s.rows();
  const std::size_t n = 2 * m + 2;
  RationalMatrix h(n, n);
  h(0, n - 1) = 1;
  h(n - 1, 0) = 1;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      if (s(r, c) == 0) continue;
      h(1 + r, 1 + m + c) -= s(r, c);
      h(1 + m + c, 1 + r) -= s(r, c);
    }
  return h;
}

Provenance ms_provenance(const RationalMatrix& s) {
  Provenance p;
  p.kind = SystemKind::ms;
  p.w_dim = s.rows();
  p.s_gram = s;
  p.formal = s.rows() % 2 != 0;
  p.label = "ms(W=" + std::to_string(s.rows()) + (p.formal ? ", formal)" : ")");
  return p;
}

const Provenance& require_ms(const TripleSystem& ts) {
  const auto& p = ts.provenance();
  if (p.w_dim == 0 || (p.kind != SystemKind::ms && p.kind != SystemKind::scaled))
    throw std::invalid_argument("operation requires an ms triple system");
  return p;
}

Rational s_value(const RationalMatrix& s, const RationalVector& u, const RationalVector& v) {
  return dot(u, s * v);
}

}  // namespace

TrilinearTensor ms_closed_form_tensor(const RationalMatrix& s_gram) {
  require_skew(s_gram);
  const std::size_t m = s_gram.rows();
  const std::size_t n = 2 * m + 2;
  const RationalMatrix h = ms_det_polar(s_gram);
  auto d_sign = [&](std::size_t k) { return (k == 0 || (k > m && k <= 2 * m)) ? -1 : 1; };
  std::vector<TensorEntry> entries;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (h(u, v) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational val = h(u, v) * d_sign(k);
        const auto U = static_cast<std::uint16_t>(u);
        const auto V = static_cast<std::uint16_t>(v);
        const auto K = static_cast<std::uint16_t>(k);
        entries.push_back({U, V, K, K, val});
        entries.push_back({K, U, V, K, val});
        entries.push_back({U, K, V, K, val});
      }
    }
  return TrilinearTensor(n, std::move(entries));
}

TripleSystem build_ms(const RationalMatrix& s_gram) {
  require_skew(s_gram);
  const std::size_t m = s_gram.rows();
  Provenance prov = ms_provenance(s_gram);
  if (prov.formal) return TripleSystem(ms_b_gram(s_gram), ms_closed_form_tensor(s_gram), prov);
  inverse(s_gram);  // throws std::domain_error for a degenerate s
  const std::size_t n = 2 * m + 2;
  const auto x = poly_variables(n);
  Poly det = x[0] * x[n - 1];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      if (s_gram(r, c) != 0) det -= s_gram(r, c) * (x[1 + r] * x[1 + m + c]);
  return build_from_quartic(ms_b_gram(s_gram), Rational(12) * (det * det), std::move(prov));
}

TripleSystem build_ms(std::size_t w_dim) { return build_ms(ms_standard_s(w_dim)); }

MsParts ms_split(const RationalVector& x, std::size_t w_dim) {
  require_same_size(x.size(), 2 * w_dim + 2, "ms coordinates");
  MsParts p;
  p.alpha = x[0];
  p.j.assign(x.begin() + 1, x.begin() + 1 + static_cast<std::ptrdiff_t>(w_dim));
  p.jp.assign(x.begin() + 1 + static_cast<std::ptrdiff_t>(w_dim),
              x.begin() + 1 + static_cast<std::ptrdiff_t>(2 * w_dim));
  p.beta = x.back();
  return p;
}

RationalVector ms_join(const MsParts& parts) {
  require_same_size(parts.j.size(), parts.jp.size(), "ms coordinates");
  RationalVector x;
  x.reserve(2 * parts.j.size() + 2);
  x.push_back(parts.alpha);
  x.insert(x.end(), parts.j.begin(), parts.j.end());
  x.insert(x.end(), parts.jp.begin(), parts.jp.end());
  x.push_back(parts.beta);
  return x;
}

MsDiagnostics ms_diagnostics(const TripleSystem& ts, const RationalVector& x,
                             const RationalVector& y) {
  const auto& prov = require_ms(ts);
  const auto& s = prov.s_gram;
  const std::size_t w = prov.w_dim;
  const Rational lambda = prov.kind == SystemKind::scaled ? prov.lambda : Rational(1);
  if (lambda != 1) throw std::invalid_argument("ms diagnostics need an unscaled ms system");
  auto det = [&](const RationalVector& v) {
    const auto p = ms_split(v, w);
    return Rational(p.alpha * p.beta - s_value(s, p.j, p.jp));
  };
  auto wdet = [&](const RationalVector& v) {
    const auto p = ms_split(v, w);
    return Rational(3 * p.alpha * p.beta - s_value(s, p.j, p.jp));
  };
  MsDiagnostics d;
  d.det_x = det(x);
  d.det_y = det(y);
  d.wdet_x = wdet(x);
  d.wdet_y = wdet(y);
  d.det_lin = det(x + y) - d.det_x - d.det_y;
  const auto px = p_map(ts, x, x);
  const auto py = p_map(ts, y, y);
  d.trace_eighth = trace_of_product(px, py) / 8;
  const Rational byx = ts.b(y, x);
  const Rational coeff = Rational(static_cast<long>(w)) - 7;
  d.trform_rhs = 3 * ts.q(x, x, y, y) - byx * byx + coeff * d.det_x * d.det_y -
                 5 * d.det_lin * d.det_lin;
  d.trform_check = d.trform_rhs == d.trace_eighth;
  d.remainder = 5 * byx * byx + coeff * d.det_x * d.det_y - 5 * d.det_lin * d.det_lin;
  return d;
}

std::pair<RationalVector, RationalVector> ms_structured_witness(const TripleSystem& ts) {
  const auto& prov = require_ms(ts);
  const std::size_t w = prov.w_dim;
  const auto& s = prov.s_gram;
  // Two hyperbolic pairs (e1, f1), (e2, f2) of s, found from the Gram matrix.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(w, false);
  for (std::size_t r = 0; r < w && pairs.size() < 2; ++r) {
    if (used[r]) continue;
    for (std::size_t c = 0; c < w; ++c) {
      if (used[c] || c == r || s(r, c) == 0) continue;
      bool clean = true;
      for (std::size_t k = 0; k < w; ++k) {
        if (k != c && s(r, k) != 0) clean = false;
        if (k != r && s(c, k) != 0) clean = false;
      }
      if (!clean) continue;
      pairs.emplace_back(r, c);
      used[r] = used[c] = true;
      break;
    }
  }
  if (pairs.size() < 2) throw std::invalid_argument("s has no two orthogonal hyperbolic pairs");
  auto make = [&](std::size_t e, std::size_t f) {
    MsParts p{0, RationalVector(w, 0), RationalVector(w, 0), 0};
    p.j[e] = 1;
    p.jp[f] = 1 / s(e, f);
    return ms_join(p);
  };
  return {make(pairs[0].first, pairs[0].second), make(pairs[1].first, pairs[1].second)};
}

RationalMatrix varpi_matrix(const TripleSystem& ts) {
  const std::size_t w = require_ms(ts).w_dim;
  const std::size_t n = 2 * w + 2;
  RationalMatrix g(n, n);
  g(0, n - 1) = -1;
  g(n - 1, 0) = 1;
  for (std::size_t r = 0; r < w; ++r) {
    g(1 + r, 1 + w + r) = 1;
    g(1 + w + r, 1 + r) = 1;
  }
  return g;
}

RationalVector varpi(const TripleSystem& ts, const RationalVector& x) {
  return varpi_matrix(ts) * x;
}

RationalMatrix dagger(const TripleSystem& ts, const RationalMatrix& phi) {
  const auto& s = require_ms(ts).s_gram;
  const RationalMatrix sinv = inverse(s);
  return inverse(sinv * phi.transpose() * s);
}

RationalMatrix f_map(const TripleSystem& ts, const Rational& c, const RationalVector& u,
                     const RationalMatrix& phi) {
  const auto& prov = require_ms(ts);
  const std::size_t w = prov.w_dim;
  const auto& s = prov.s_gram;
  if (c == 0) throw std::domain_error("f(c, u, phi) needs c != 0");
  require_same_size(u.size(), w, "f_map u");
  if (phi.rows() != w || phi.cols() != w) throw std::invalid_argument("phi must act on W");
  const RationalMatrix phid = dagger(ts, phi);
  const std::size_t n = 2 * w + 2;
  RationalMatrix f(n, n);
  f(0, 0) = c;
  const RationalVector su = s * u;
  const RationalVector beta_row = phi.transpose() * su;  // j -> s(φ(j), u)
  for (std::size_t r = 0; r < w; ++r) {
    for (std::size_t k = 0; k < w; ++k) {
      f(1 + r, 1 + k) = phi(r, k);
      f(1 + w + r, 1 + w + k) = phid(r, k);
    }
    f(1 + w + r, 0) = u[r];
    f(n - 1, 1 + r) = beta_row[r] / c;
  }
  f(n - 1, n - 1) = 1 / c;
  return f;
}

bool check_f_composition(const TripleSystem& ts, const Rational& c, const RationalVector& u,
                         const RationalMatrix& phi, const Rational& d, const RationalVector& v,
                         const RationalMatrix& psi) {
  const RationalMatrix lhs = f_map(ts, c, u, phi) * f_map(ts, d, v, psi);
  const RationalVector combined = scaled(d, u) + dagger(ts, phi) * v;
  return lhs == f_map(ts, c * d, combined, phi * psi);
}

// ---------------------------------------------------------------- albert

QuarticCoefficients albert_quartic_coefficients() { return {12, -48, -48}; }

RationalMatrix albert_b_gram(const AlbertAlgebra& J) {
  constexpr std::size_t d = AlbertAlgebra::kDim;
  constexpr std::size_t n = 2 * d + 2;
  RationalMatrix g(n, n);
  g(0, n - 1) = 1;
  g(n - 1, 0) = -1;
  const auto& tg = J.trace_gram();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      if (tg(r, c) == 0) continue;
      g(1 + r, 1 + d + c) = tg(r, c);
      g(1 + d + r, 1 + c) = -tg(r, c);
    }
  return g;
}

std::array<Poly, 3> albert_quartic_terms(const AlbertAlgebra& J) {
  constexpr std::size_t d = AlbertAlgebra::kDim;
  constexpr std::size_t n = 2 * d + 2;
  const auto x = poly_variables(n);
  const Vec<Poly> j(x.begin() + 1, x.begin() + 1 + d);
  const Vec<Poly> jp(x.begin() + 1 + d, x.begin() + 1 + 2 * d);
  const Poly& alpha = x[0];
  const Poly& beta = x[n - 1];
  const Poly det = alpha * beta - J.trace(j, jp);
  return {det * det, J.trace(J.sharp(j), J.sharp(jp)), alpha * J.norm(j) + beta * J.norm(jp)};
}

namespace {

Provenance albert_provenance(std::shared_ptr<const AlbertAlgebra> J) {
  Provenance p;
  p.kind = SystemKind::albert;
  const auto& params = J->octonions().parameters();
  p.label = "albert(" + to_fraction_string(params[0]) + "," + to_fraction_string(params[1]) + "," +
            to_fraction_string(params[2]) + ")";
  p.albert = std::move(J);
  return p;
}

}  // namespace

TripleSystem build_albert(std::shared_ptr<const AlbertAlgebra> J, const QuarticCoefficients& c) {
  if (!J) throw std::invalid_argument("build_albert needs an Albert algebra");
  const auto terms = albert_quartic_terms(*J);
  const Poly q = c.c1 * terms[0] + c.c2 * terms[1] + c.c3 * terms[2];
  return build_from_quartic(albert_b_gram(*J), q, albert_provenance(J));
}

namespace {

// Nonzero (c2, c3) with M (c2², c2c3, c3², c2, c3)^T + constant = 0. The
// linear solution space is parametrized by its free columns, which must lie
// among the linear unknowns; directions (p : q) of solutions are then the
// rational roots of a binary form and the scale follows from c2² = L0.
std::vector<std::pair<Rational, Rational>> solve_veronese(const RationalMatrix& m,
                                                          const RationalVector& constant) {
  RationalMatrix aug(m.rows(), 6);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < 5; ++c) aug(r, c) = m(r, c);
    aug(r, 5) = constant[r];
  }
  const auto basis = nullspace_basis(aug);
  const auto& ns = basis.vectors;
  const auto& free_cols = basis.free_columns;
  for (std::size_t f : free_cols)
    if (f < 3) throw CalibrationError("unsupported solution structure: a quadratic unknown is free");
  // w(c2, c3) = Σ_f w_f v_f with w_3 = c2, w_4 = c3, w_5 = 1.
  auto w_at = [&](const Rational& c2, const Rational& c3, const Rational& one) {
    RationalVector w(6, 0);
    for (std::size_t k = 0; k < ns.size(); ++k) {
      const Rational coeff = free_cols[k] == 3 ? c2 : free_cols[k] == 4 ? c3 : one;
      for (std::size_t i = 0; i < 6; ++i) w[i] += coeff * ns[k][i];
    }
    return w;
  };
  auto consistent = [&](const Rational& c2, const Rational& c3) {
    const RationalVector w = w_at(c2, c3, 1);
    return w[0] == c2 * c2 && w[1] == c2 * c3 && w[2] == c3 * c3 && w[3] == c2 && w[4] == c3 &&
           w[5] == 1;
  };
  std::vector<std::pair<Rational, Rational>> out;
  auto add = [&](const Rational& c2, const Rational& c3) {
    if ((c2 != 0 || c3 != 0) && consistent(c2, c3) &&
        std::find(out.begin(), out.end(), std::make_pair(c2, c3)) == out.end())
      out.emplace_back(c2, c3);
  };
  if (!is_zero_vector(constant)) {
    // Only a unique affine solution is handled.
    if (free_cols.size() == 1 && free_cols[0] == 5) {
      const RationalVector w = w_at(0, 0, 1);
      add(w[3], w[4]);
      return out;
    }
    throw CalibrationError("unsupported solution structure for a nonzero constant term");
  }
  // Homogeneous: e_5 spans the constant direction and L(p, q) = w(p, q, 0)
  // is linear in (p, q).
  const RationalVector wp = w_at(1, 0, 0);
  const RationalVector wq = w_at(0, 1, 0);
  const Rational &a0 = wp[0], &b0 = wq[0], &a1 = wp[1], &b1 = wq[1], &a2 = wp[2], &b2 = wq[2];
  // Solution directions (p : q) satisfy p L1 - q L0 = 0, q L1 - p L2 = 0 and
  // p² L2 - q² L0 = 0; with (p, q) = (r, 1) these are polynomials in r.
  const std::vector<RationalVector> direction_polys = {
      {-b0, b1 - a0, a1},
      {b1, a1 - b2, -a2},
      {-b0, -a0, b2, a2},
  };
  std::vector<Rational> roots;
  for (const auto& poly : direction_polys) {
    if (is_zero_vector(poly)) continue;
    roots = rational_roots(poly);
    break;
  }
  std::vector<std::pair<Rational, Rational>> dirs{{1, 0}, {0, 1}};
  for (const auto& r : roots) dirs.emplace_back(r, 1);
  for (const auto& [p, q] : dirs) {
    if (p != 0) {
      const Rational s = (a0 * p + b0 * q) / (p * p);
      add(s * p, s * q);
    } else {
      const Rational s = (a2 * p + b2 * q) / (q * q);
      add(s * p, s * q);
    }
  }
  return out;
}

}  // namespace

QuarticCoefficients calibrate_albert_quartic(const AlbertAlgebra& J, std::uint64_t seed,
                                             std::size_t points) {
  constexpr std::size_t n = 2 * AlbertAlgebra::kDim + 2;
  const RationalMatrix g = albert_b_gram(J);
  const auto terms = albert_quartic_terms(J);
  std::vector<TripleSystem> parts;
  for (const auto& term : terms) parts.push_back(build_from_quartic(g, term, Provenance{}));

  // FTS3 for t = Σ c_k t_k at (x, y), componentwise:
  //   Σ_{k,l} c_k c_l t_k(t_l(x,x,x), x, y) - Σ_l c_l [b(y,x) t_l(x,x,x) + b(y, t_l(x,x,x)) x] = 0.
  struct Pieces {
    std::array<std::array<RationalVector, 3>, 3> a;  // a[k][l]
    std::array<RationalVector, 3> r;
  };
  auto pieces = [&](const RationalVector& x, const RationalVector& y) {
    Pieces p;
    std::array<RationalVector, 3> tl;
    for (std::size_t l = 0; l < 3; ++l) tl[l] = parts[l].t(x, x, x);
    const Rational byx = parts[0].b(y, x);
    for (std::size_t l = 0; l < 3; ++l) {
      for (std::size_t k = 0; k < 3; ++k) p.a[k][l] = parts[k].t(tl[l], x, y);
      p.r[l] = scaled(byx, tl[l]) + scaled(parts[0].b(y, tl[l]), x);
    }
    return p;
  };

  // c1: at x with j = j' = 0 only the first term contributes.
  std::optional<Rational> c1;
  for (std::size_t i = 0; i < points; ++i) {
    auto rng = sample_rng(seed, i);
    RationalVector x(n, 0);
    x[0] = random_nonzero_rational(rng, 5, 1);
    x[n - 1] = random_nonzero_rational(rng, 5, 1);
    const RationalVector y = random_integer_vector(rng, n, 3);
    const Pieces p = pieces(x, y);
    for (std::size_t comp = 0; comp < n; ++comp) {
      const Rational& a = p.a[0][0][comp];
      const Rational& r = p.r[0][comp];
      if (a == 0) {
        if (r != 0) throw CalibrationError("first quartic term admits only c1 = 0");
        continue;
      }
      const Rational cand = r / a;
      if (c1 && *c1 != cand) throw CalibrationError("inconsistent c1 across probe points");
      c1 = cand;
    }
  }
  if (!c1 || *c1 == 0) throw CalibrationError("c1 is not determined by the probe points");

  // With c1 fixed the system is linear in (c2², c2c3, c3², c2, c3) plus a constant.
  RationalMatrix m(points * n, 5);
  RationalVector constant(points * n);
  std::vector<std::pair<RationalVector, RationalVector>> probes;
  for (std::size_t i = 0; i < points; ++i) {
    auto rng = sample_rng(seed, points + i);
    RationalVector x = random_integer_vector(rng, n, 3);
    RationalVector y = random_integer_vector(rng, n, 3);
    const Pieces p = pieces(x, y);
    for (std::size_t comp = 0; comp < n; ++comp) {
      const std::size_t row = i * n + comp;
      m(row, 0) = p.a[1][1][comp];
      m(row, 1) = p.a[1][2][comp] + p.a[2][1][comp];
      m(row, 2) = p.a[2][2][comp];
      m(row, 3) = *c1 * (p.a[0][1][comp] + p.a[1][0][comp]) - p.r[1][comp];
      m(row, 4) = *c1 * (p.a[0][2][comp] + p.a[2][0][comp]) - p.r[2][comp];
      constant[row] = *c1 * *c1 * p.a[0][0][comp] - *c1 * p.r[0][comp];
    }
    probes.emplace_back(std::move(x), std::move(y));
  }

  const auto solutions = solve_veronese(m, constant);
  if (solutions.empty()) throw CalibrationError("no nonzero coefficient vector satisfies FTS3");
  // (c2, c3) and (c2, -c3) give isometric systems via (α, j, j', β) -> (α, -j, -j', β);
  // the representative with c3 <= 0 is returned.
  std::vector<std::pair<Rational, Rational>> reps;
  for (const auto& [c2, c3] : solutions) {
    std::pair<Rational, Rational> rep{c2, c3 > 0 ? Rational(-c3) : c3};
    if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
  }
  if (reps.size() != 1) throw CalibrationError("FTS3 has several inequivalent solutions");
  const QuarticCoefficients c{*c1, reps[0].first, reps[0].second};

  // Confirm FTS3 exactly at every probe point.
  for (const auto& [x, y] : probes) {
    const Pieces p = pieces(x, y);
    const std::array<Rational, 3> cv{c.c1, c.c2, c.c3};
    for (std::size_t comp = 0; comp < n; ++comp) {
      Rational acc = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        acc -= cv[k] * p.r[k][comp];
        for (std::size_t l = 0; l < 3; ++l) acc += cv[k] * cv[l] * p.a[k][l][comp];
      }
      if (acc != 0) throw CalibrationError("calibrated coefficients fail FTS3 at a probe point");
    }
  }
  return c;
}

// ---------------------------------------------------------------- general

TripleSystem scale(const TripleSystem& ts, const Rational& lambda) {
  if (lambda == 0) throw std::invalid_argument("scaling factor must be nonzero");
  Provenance p = ts.provenance();
  p.parent_label = p.label;
  p.lambda = p.lambda * lambda;
  p.kind = SystemKind::scaled;
  p.label = "scaled(" + to_fraction_string(lambda) + ", " + p.parent_label + ")";
  return TripleSystem(lambda * ts.b_gram(), ts.tensor().scaled(lambda), std::move(p));
}

Rational trace_identity_residual(const TripleSystem& ts, const RationalVector& x,
                                 const RationalVector& y) {
  const Rational tr = trace_of_product(p_map(ts, x, x), p_map(ts, y, y));
  const Rational byx = ts.b(y, x);
  return tr - 24 * (ts.q(x, x, y, y) - 2 * byx * byx);
}

CheckResult check_similarity(const TripleSystem& ts, const RationalMatrix& g, const Rational& lambda,
                             const std::string& name, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = ts.dimension();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("similarity must act on V");
  CheckResult r;
  r.name = name;
  const RationalMatrix& gram = ts.b_gram();
  const RationalMatrix pulled = g.transpose() * gram * g;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (pulled(a, b) != lambda * gram(a, b)) {
        r.status = Status::fail;
        r.witness = Json{{"b_pair", {a, b}},
                         {"lhs", to_fraction_string(pulled(a, b))},
                         {"rhs", to_fraction_string(lambda * gram(a, b))}};
        r.detail = "b(g e_a, g e_b) != lambda b(e_a, e_b)";
        return r;
      }

  // Monomial g: column k is sign[k] * e_{perm[k]}.
  std::vector<std::size_t> perm(n);
  RationalVector sign(n);
  bool monomial = true;
  for (std::size_t k = 0; k < n && monomial; ++k) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g(i, k) != 0) {
        ++count;
        perm[k] = i;
        sign[k] = g(i, k);
      }
    monomial = count == 1;
  }
  if (monomial) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          RationalVector lhs(n, 0);
          for (const auto& [i, v] : ts.tensor().basis_value(perm[a], perm[b], perm[c]))
            lhs[i] = sign[a] * sign[b] * sign[c] * v;
          RationalVector base(n, 0);
          for (const auto& [i, v] : ts.tensor().basis_value(a, b, c)) base[i] = v;
          const RationalVector rhs = scaled(lambda, g * base);
          if (lhs != rhs) {
            r.status = Status::fail;
            r.witness = Json{{"t_triple", {a, b, c}}};
            r.detail = "t(g e_a, g e_b, g e_c) != lambda g t(e_a, e_b, e_c)";
            return r;
          }
        }
    r.evidence.exhaustive = true;
    r.detail = "b on all basis pairs, t on all basis triples";
    return r;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = sample_rng(seed, s);
    const auto x = random_rational_vector(rng, n);
    const auto y = random_rational_vector(rng, n);
    const auto z = random_rational_vector(rng, n);
    const auto lhs = ts.t(g * x, g * y, g * z);
    const auto rhs = scaled(lambda, g * ts.t(x, y, z));
    if (lhs != rhs) {
      r.status = Status::fail;
      r.witness = Json{{"x", witness_vector(x)}, {"y", witness_vector(y)}, {"z", witness_vector(z)}};
      r.detail = "t(gx, gy, gz) != lambda g t(x, y, z)";
      return r;
    }
  }
  r.evidence.samples = samples;
  r.detail = "b on all basis pairs, t on random triples";
  return r;
}

}  // namespace e7
