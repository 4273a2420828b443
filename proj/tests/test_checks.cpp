#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "affchar/checks.hpp"

using namespace affchar;

namespace {

CheckParams params(char type, int rank) {
  CheckParams p;
  p.type = type;
  p.rank = rank;
  return p;
}

std::string without_elapsed(const Report& r) {
  ordered_json j = report_json(r);
  j.erase("elapsed_ms");
  return j.dump();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("fks A1 passes, C2 fails with the irreducible side larger") {
  CheckParams p = params('A', 1);
  p.coset = 0;
  p.depth = 8;
  const Report a1 = run_verification("fks", p);
  CHECK(a1.status == Status::Pass);
  CHECK(!a1.first_discrepancy);
  CHECK(a1.truncated);
  const ordered_json j = report_json(a1);
  CHECK(j["status"] == "PASS");
  CHECK(!j.contains("first_discrepancy"));

  p = params('C', 2);
  p.depth = 8;
  const Report c2 = run_verification("fks", p);
  REQUIRE(c2.status == Status::Fail);
  const ordered_json d = report_json(c2)["first_discrepancy"];
  CHECK(d["weight"] == ordered_json::array({-2, 1}));
  CHECK(d["q"] == "1/1");
  CHECK(d["lhs"] == "1");
  CHECK(d["rhs"] == "0");

  const Report control = run_verification("fks-control", p);
  CHECK(control.status == Status::Pass);
  CHECK(control.details["first_failing_depth"] == "1/1");

  struct Frozen {
    char type;
    int coset;
    std::vector<int> weight;
    const char* q;
  };
  for (const auto& f : std::vector<Frozen>{{'C', 2, {0, 0}, "0/1"}, {'G', 0, {-2, 1}, "1/1"}}) {
    CheckParams c = params(f.type, 2);
    c.coset = f.coset;
    c.depth = 8;
    const Report r = run_verification("fks", c);
    REQUIRE(r.status == Status::Fail);
    CHECK((*r.first_discrepancy)["weight"] == ordered_json(f.weight));
    CHECK((*r.first_discrepancy)["q"] == f.q);
    CHECK((*r.first_discrepancy)["lhs"] == "1");
    CHECK((*r.first_discrepancy)["rhs"] == "0");
  }
}

TEST_CASE("tensor A1 alpha, alpha: 16 = 4 * 4") {
  CheckParams p = params('A', 1);
  p.lambda = std::vector<std::int64_t>{2};
  p.mu = std::vector<std::int64_t>{2};
  const Report r = run_verification("tensor", p);
  CHECK(r.status == Status::Pass);
  CHECK(r.details["dim_lambda_plus_mu"] == "16");
  CHECK(r.details["dim_lambda"] == "4");
}

TEST_CASE("report key order") {
  CheckParams p = params('C', 2);
  p.depth = 2;
  const ordered_json j = report_json(run_verification("fks", p));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> expected = {"check",  "params", "status",    "first_discrepancy", "elapsed_ms",
                                             "engine_version", "claim", "truncated", "details"};
  CHECK(keys == expected);
}

TEST_CASE("reports are deterministic apart from the elapsed time") {
  CheckParams p = params('D', 4);
  p.lambda = std::vector<std::int64_t>{0, 1, 0, 0};
  for (const char* check : {"smooth-locus", "fixed-support", "curves", "operators"}) {
    INFO(check);
    CHECK(without_elapsed(run_verification(check, p)) == without_elapsed(run_verification(check, p)));
  }
}

TEST_CASE("emit_report writes files atomically and byte-stably") {
  const auto dir = std::filesystem::temp_directory_path() / "affchar_test_checks";
  std::filesystem::create_directories(dir);
  Report r = run_verification("hand-oracle", params('A', 1));
  r.elapsed_ms = 1.5;
  emit_report(r, Format::Json, (dir / "a.json").string());
  emit_report(r, Format::Json, (dir / "b.json").string());
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  CHECK(!std::filesystem::exists(dir / "a.json.tmp"));
  CHECK(ordered_json::parse(slurp(dir / "a.json"))["status"] == "PASS");
  CHECK_THROWS(emit_report(r, Format::Json, (dir / "missing" / "x.json").string()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("text reports are aligned tables") {
  const std::string text = report_text(run_verification("hand-oracle", params('A', 1)));
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> column;
  while (std::getline(in, line)) {
    const std::size_t key_end = line.find(' ');
    const std::size_t value = line.find_first_not_of(' ', key_end);
    REQUIRE(value != std::string::npos);
    if (column) CHECK(value == *column);
    column = value;
  }
  CHECK(text.find("status") != std::string::npos);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(run_verification("no-such-check", params('A', 1)), InputError);
  CHECK_THROWS_AS(run_verification("fks", params('A', 0)), InputError);
  CHECK_THROWS_AS(run_verification("fks", params('H', 3)), InputError);
  CheckParams p = params('A', 2);
  CHECK_THROWS_AS(run_verification("tensor", p), InputError);  // no lambda
  p.lambda = std::vector<std::int64_t>{1};
  CHECK_THROWS_AS(run_verification("tensor", p), InputError);
  p.lambda = std::vector<std::int64_t>{1, -1};
  CHECK_THROWS_AS(run_verification("tensor", p), InputError);
  p = params('A', 2);
  p.coset = 5;
  CHECK_THROWS_AS(run_verification("fks", p), InputError);
  p.coset = 1;
  p.level = 2;
  CHECK_THROWS_AS(run_verification("fks", p), InputError);
  p = params('A', 3);
  CHECK_THROWS_AS(run_verification("boundary", p), InputError);
  p.lambda = std::vector<std::int64_t>{1, 0, 0};
  p.mu = std::vector<std::int64_t>{2, 0, 0};
  CHECK_THROWS_AS(run_verification("domination", p), InputError);
  CHECK_THROWS_AS(parse_int_list("1,x"), InputError);
  CHECK_THROWS_AS(parse_int_list(""), InputError);
  CHECK(parse_int_list("1,0,-2") == std::vector<std::int64_t>{1, 0, -2});
}

TEST_CASE("exceeded caps give SKIPPED") {
  CheckParams p = params('E', 8);
  p.lambda = std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0, 0};
  p.caps.orbit = 100;
  const Report r = run_verification("smooth-locus", p);
  CHECK(r.status == Status::Skipped);
  CHECK(!r.reason.empty());
  const ordered_json j = report_json(r);
  CHECK(j["status"] == "SKIPPED");
  CHECK(j.contains("reason"));
  CHECK(!j.contains("first_discrepancy"));
}

TEST_CASE("caps from the environment") {
  setenv("AFFCHAR_CAP_ORBIT", "1234", 1);
  CHECK(caps_from_env().orbit == 1234);
  setenv("AFFCHAR_CAP_ORBIT", "lots", 1);
  CHECK_THROWS_AS(caps_from_env(), InputError);
  unsetenv("AFFCHAR_CAP_ORBIT");
  CHECK(caps_from_env().orbit == Caps{}.orbit);
}

TEST_CASE("smaller checks") {
  CheckParams p = params('D', 5);
  p.lambda = std::vector<std::int64_t>{0, 0, 1, 0, 0};
  const Report b = run_verification("boundary", p);
  CHECK(b.status == Status::Pass);
  CHECK(b.details["dim_V_lambda"] == "130");

  p = params('A', 2);
  p.lambda = std::vector<std::int64_t>{2, 2};
  CHECK(run_verification("domination", p).status == Status::Pass);
  p.depth = 2;
  CHECK(run_verification("borel-weil", p).status == Status::Pass);
  p.lambda.reset();
  p.coset = 1;
  CHECK(run_verification("minuscule", p).status == Status::Pass);
  CHECK(run_verification("coroots", params('G', 2)).status == Status::Pass);
}
