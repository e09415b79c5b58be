#include "e7/report.hpp"

#include <algorithm>

namespace e7 {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

Json to_json(const CheckResult& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  j["evidence"] = {{"samples", r.evidence.samples},
                   {"primes", r.evidence.primes},
                   {"exhaustive", r.evidence.exhaustive}};
  j["detail"] = r.detail;
  return j;
}

Json witness_vector(const RationalVector& v) { return Json(to_fraction_strings(v)); }

Json witness_scalar(const Rational& v) { return Json(to_fraction_string(v)); }

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == Status::fail; });
}

const CheckResult* find_check(const std::vector<CheckResult>& checks, const std::string& name) {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const CheckResult& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

}  // namespace e7
