#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace e7 {

/// Exact rational scalar. GMP keeps numerator/denominator canonical after
/// every arithmetic operation.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "p/q", or "-p/q". Throws std::invalid_argument on junk or q = 0.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q > 0 and gcd(p, q) = 1, including "0/1" and "3/1".
std::string to_fraction_string(const Rational& value);
std::vector<std::string> to_fraction_strings(const RationalVector& values);

bool is_rational_square(const Rational& value);

/// Deterministic per-sample generator: the stream for (seed, index) never
/// depends on evaluation order.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Small random rational: numerator in [-bound, bound], denominator in [1, max_den].
Rational random_rational(std::mt19937_64& rng, int bound = 9, int max_den = 4);
Rational random_nonzero_rational(std::mt19937_64& rng, int bound = 9, int max_den = 4);
RationalVector random_rational_vector(std::mt19937_64& rng, std::size_t n, int bound = 9,
                                      int max_den = 4);
RationalVector random_integer_vector(std::mt19937_64& rng, std::size_t n, int bound = 5);

}  // namespace e7
