#include "e7/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace e7 {

std::size_t monomial_degree(Monomial m) {
  std::size_t d = 0;
  while (m != 0) {
    ++d;
    m >>= 8;
  }
  return d;
}

std::vector<std::size_t> monomial_variables(Monomial m) {
  std::vector<std::size_t> vars;
  while (m != 0) {
    vars.push_back((m & 0xFFu) - 1);
    m >>= 8;
  }
  return vars;
}

Monomial make_monomial(std::vector<std::size_t> vars) {
  if (vars.size() > kMaxMonomialDegree) throw std::overflow_error("monomial degree exceeds 4");
  std::sort(vars.begin(), vars.end());
  Monomial m = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] >= 255) throw std::out_of_range("monomial variable index too large");
    m |= static_cast<Monomial>(vars[i] + 1) << (8 * i);
  }
  return m;
}

Monomial monomial_product(Monomial a, Monomial b) {
  if (a == 0) return b;
  if (b == 0) return a;
  auto va = monomial_variables(a);
  auto vb = monomial_variables(b);
  va.insert(va.end(), vb.begin(), vb.end());
  return make_monomial(std::move(va));
}

std::size_t monomial_orderings(Monomial m) {
  auto vars = monomial_variables(m);
  std::size_t result = 1;
  for (std::size_t k = 2; k <= vars.size(); ++k) result *= k;
  std::size_t i = 0;
  while (i < vars.size()) {
    std::size_t j = i;
    while (j < vars.size() && vars[j] == vars[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) result /= k;
    i = j;
  }
  return result;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

Poly Poly::variable(std::size_t index) {
  Poly p;
  p.terms_.emplace(make_monomial({index}), Rational(1));
  return p;
}

bool Poly::is_homogeneous(std::size_t degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const auto& t) { return monomial_degree(t.first) == degree; });
}

Rational Poly::evaluate(const RationalVector& point) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t v : monomial_variables(m)) term *= point.at(v);
    acc += term;
  }
  return acc;
}

void Poly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator-(Poly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
  return out;
}

Poly operator*(const Rational& c, const Poly& a) {
  if (c == 0) return Poly();
  Poly out = a;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

std::vector<Poly> poly_variables(std::size_t n, std::size_t offset) {
  std::vector<Poly> vars;
  vars.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vars.push_back(Poly::variable(offset + i));
  return vars;
}

namespace {

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    if (d * d != v) out.push_back(v / d);
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const RationalVector& coeffs) {
  RationalVector c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  // Factor out r = 0.
  std::size_t shift = 0;
  while (c[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
  if (c.size() == 1) return roots;
  // Clear denominators.
  mpz_class lcm = 1;
  for (const auto& v : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& v : c) z.push_back(mpz_class(v * lcm));
  auto eval = [&](const Rational& r) {
    Rational acc = 0;
    for (std::size_t k = z.size(); k-- > 0;) acc = acc * r + Rational(z[k]);
    return acc;
  };
  for (const auto& p : divisors(z.front()))
    for (const auto& q : divisors(z.back()))
      for (int sign : {1, -1}) {
        Rational r(sign * p, q);
        r.canonicalize();
        if (eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace e7
