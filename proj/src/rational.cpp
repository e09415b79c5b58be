#include "e7/rational.hpp"

#include <stdexcept>

namespace e7 {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational: " + s);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational: " + s);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (seen_slash) {
    auto slash = s.find('/');
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r = Rational(mpz_class(s.substr(0, slash)), den);
  } else {
    r = Rational(mpz_class(s));
  }
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  // mpq_class(p, q) does not reduce, so canonicalize a copy before printing.
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::vector<std::string> to_fraction_strings(const RationalVector& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_fraction_string(v));
  return out;
}

bool is_rational_square(const Rational& value) {
  if (value < 0) return false;
  return mpz_perfect_square_p(value.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(value.get_den().get_mpz_t()) != 0;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return std::mt19937_64(z);
}

Rational random_rational(std::mt19937_64& rng, int bound, int max_den) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rational random_nonzero_rational(std::mt19937_64& rng, int bound, int max_den) {
  for (;;) {
    Rational r = random_rational(rng, bound, max_den);
    if (r != 0) return r;
  }
}

RationalVector random_rational_vector(std::mt19937_64& rng, std::size_t n, int bound,
                                      int max_den) {
  RationalVector v(n);
  for (auto& x : v) x = random_rational(rng, bound, max_den);
  return v;
}

RationalVector random_integer_vector(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  RationalVector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace e7
