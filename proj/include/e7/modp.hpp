#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "e7/rational.hpp"

namespace e7 {

/// Arithmetic in Z/p for a prime p < 2^62.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t prime() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t from_int(long long v) const;
  /// Nullopt when p divides the denominator.
  std::optional<std::uint64_t> reduce(const Rational& r) const;

 private:
  std::uint64_t p_;
};

/// Random primes in [2^61, 2^62), deterministic in the seed, pairwise distinct.
std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t seed);

}  // namespace e7
