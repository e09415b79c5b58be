#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "e7/cli.hpp"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = e7::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json without_timing(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("real-table report") {
  const Run r = run({"real-table"});
  CHECK(r.code == e7::cli::kExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "real-table");
  REQUIRE(j["result"]["rows"].size() == 4);
  std::vector<int> w;
  for (const auto& row : j["result"]["rows"]) w.push_back(row["witt_index"].get<int>());
  CHECK(w == std::vector<int>{28, 28, 24, 0});
  CHECK(j.contains("timing_ms"));
  CHECK(j["checks"][0]["status"] == "pass");
}

TEST_CASE("classify ms reports the residual") {
  const Run r27 = run({"fts", "classify", "--kind", "ms", "--w-dim", "27", "--samples", "3"});
  CHECK(r27.code == 0);
  const Json j = Json::parse(r27.out);
  CHECK(j["result"]["classification"] == "degenerate");
  CHECK(j["result"]["residual"] == "160/1");
  const Run r26 = run({"fts", "classify", "--kind", "ms", "--w-dim", "26", "--samples", "3"});
  CHECK(Json::parse(r26.out)["result"]["residual"] == "152/1");
  // The witness vectors are fraction strings.
  const Json& x = j["checks"][0]["witness"]["x"];
  REQUIRE(x.is_array());
  CHECK(x[0].get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("failing checks give exit code 1") {
  const Run r = run({"fts", "check", "--kind", "ms", "--w-dim", "26", "--samples", "2"});
  CHECK(r.code == e7::cli::kExitCheckFailed);
  const Json j = Json::parse(r.out);
  bool badtrid_failed = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "badtrid") {
      badtrid_failed = c["status"] == "fail";
      CHECK_FALSE(c["witness"].is_null());
    }
  CHECK(badtrid_failed);
}

TEST_CASE("usage errors give exit code 2") {
  CHECK(run({}).code == e7::cli::kExitUsage);
  CHECK(run({"fts"}).code == e7::cli::kExitUsage);
  CHECK(run({"fts", "check", "--kind", "nope"}).code == e7::cli::kExitUsage);
  CHECK(run({"fts", "check", "--samples", "0"}).code == e7::cli::kExitUsage);
  CHECK(run({"fts", "check", "--bogus"}).code == e7::cli::kExitUsage);
  CHECK(run({"descent", "build", "--a", "4"}).code == e7::cli::kExitUsage);
  CHECK(run({"descent", "build", "--b", "x/y"}).code == e7::cli::kExitUsage);
  CHECK(run({"symplem", "verify", "--n", "5"}).code == e7::cli::kExitUsage);
  CHECK_FALSE(run({"real-table", "--out", "/nonexistent/dir/x.json"}).code == 0);
}

TEST_CASE("reports are deterministic apart from timing") {
  const std::vector<std::string> args{"symplem", "verify", "--n", "2", "--seed", "7"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(without_timing(a.out) == without_timing(b.out));
  const Run c = run({"symplem", "verify", "--n", "2", "--seed", "8"});
  CHECK(without_timing(a.out) != without_timing(c.out));
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "e7cli_test_report.json";
  const Run r = run({"real-table", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["command"] == "real-table");
  std::filesystem::remove(path);
}

TEST_CASE("gift commands") {
  const Run rank = run({"gift", "rank-pi", "--kind", "albert-split", "--primes", "2"});
  CHECK(rank.code == 0);
  CHECK(Json::parse(rank.out)["result"]["rank"] == 133);
  const Run check = run({"gift", "check", "--kind", "albert-division", "--samples", "1"});
  CHECK(check.code == 0);
  const Run ideals = run({"gift", "ideals", "--kind", "albert-split"});
  CHECK(ideals.code == 0);
  CHECK(Json::parse(ideals.out)["result"]["ideals"][0]["singular"] == true);
}

TEST_CASE("fts build reports the calibration") {
  const Run r = run({"fts", "build", "--kind", "albert-division"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["quartic_coefficients"] == Json::array({"12/1", "-48/1", "-48/1"}));
  CHECK(j["result"]["system"]["dimension"] == 56);
}
