#include "e7/modp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace e7 {

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero mod p");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::from_int(long long v) const {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  std::uint64_t magnitude = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return neg(magnitude % p_);
}

std::optional<std::uint64_t> PrimeField::reduce(const Rational& r) const {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  std::uint64_t num = mpz_fdiv_ui(r.get_num_mpz_t(), p_);
  std::uint64_t den = mpz_fdiv_ui(r.get_den_mpz_t(), p_);
  if (den == 0) return std::nullopt;
  return mul(num, inv(den));
}

std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xA5A5A5A5DEADBEEFULL);
  const std::uint64_t lo = std::uint64_t{1} << 61;
  std::uniform_int_distribution<std::uint64_t> dist(lo, (lo << 1) - (std::uint64_t{1} << 20));
  std::vector<std::uint64_t> primes;
  while (primes.size() < count) {
    mpz_class candidate(static_cast<unsigned long>(dist(rng)));
    mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    std::uint64_t p = candidate.get_ui();
    if (p >= (lo << 1)) continue;
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  return primes;
}

}  // namespace e7
