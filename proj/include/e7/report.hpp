#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "e7/rational.hpp"
#include "json.hpp"

namespace e7 {

using Json = nlohmann::ordered_json;

/// How much work a randomized checker may spend.
struct Budget {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::size_t primes = 3;
  bool exhaustive = false;
};

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct Evidence {
  std::size_t samples = 0;
  std::size_t primes = 0;
  bool exhaustive = false;
};

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  /// Fraction strings, nested arrays, or an object; null when there is none.
  Json witness;
  Evidence evidence;
  std::string detail;

  bool passed() const { return status == Status::pass; }
};

Json to_json(const CheckResult& r);
Json witness_vector(const RationalVector& v);
Json witness_scalar(const Rational& v);

/// Pass unless any check failed.
bool all_passed(const std::vector<CheckResult>& checks);
const CheckResult* find_check(const std::vector<CheckResult>& checks, const std::string& name);

}  // namespace e7
