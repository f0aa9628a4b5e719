#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "eulerian/cli.hpp"
#include "oracles.hpp"

using namespace eulerian;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "eulerian");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::pair<std::vector<std::string>, const char*> cases[] = {
      {{"tables", "eulerian"}, "tables_eulerian.txt"},
      {{"--format", "csv", "tables", "eulerian"}, "tables_eulerian.csv"},
      {{"--format", "json", "tables", "eulerian", "--r", "4"}, "tables_eulerian_r4.json"},
      {{"tables", "euler-numbers"}, "euler_numbers.txt"},
      {{"--format", "csv", "tables", "euler-numbers"}, "euler_numbers.csv"},
      {{"stat", "6 4 1 2 5 3"}, "stat_example.txt"},
      {{"--format", "json", "stat", "6 4 1 2 5 3", "E", "ΔE", "Δ′E", "Δ″E", "Δ²E", "ΔΔ′E", "Δ′²E", "z"}, "stat_example.json"},
      {{"--verbose", "map", "6 4 1 2 5 3", "bar"}, "map_bar.txt"},
      {{"map", "6 4 1 2 5 3", "fundamental"}, "map_fundamental.txt"},
      {{"--format", "json", "poly", "eulerian", "--n", "8", "--r", "2"}, "poly_eulerian_8_2.json"},
  };
  for (const auto& [args, file] : cases) {
    CAPTURE(file);
    auto o = run(args);
    CHECK(o.code == 0);
    CHECK(o.out == golden(file));
  }
}

TEST_CASE("csv table carries the shifted counts") {
  auto o = run({"--format", "csv", "tables", "eulerian", "--r", "4"});
  REQUIRE(o.code == 0);
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,n,a_0,a_1,a_2,a_3,a_4,a_5,a_6,a_7");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    const int n = std::stoi(cells[1]);
    auto want = oracle::shifted_eulerian(n, 4);
    for (size_t k = 0; k < want.size(); ++k) CHECK(mpz_class(cells[k + 2]) * 24 == want[k]);
  }
  CHECK(rows == 5);
}

TEST_CASE("json poly output parses and matches the oracle") {
  auto o = run({"--format", "json", "poly", "reduced", "--n", "7", "--r", "3", "--method", "explicit"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(j["n"] == 7);
  CHECK(j["r"] == 3);
  auto want = oracle::shifted_eulerian(7, 3);
  REQUIRE(j["coeffs"].size() == want.size());
  for (size_t k = 0; k < want.size(); ++k) CHECK(mpz_class(j["coeffs"][k].get<std::string>()) * 6 == want[k]);
}

TEST_CASE("series output") {
  auto o = run({"series", "sec", "--order", "6"});
  CHECK(o.code == 0);
  CHECK(o.out == "0: 1\n1: 0\n2: 1\n3: 0\n4: 5\n5: 0\n6: 61\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--format", "xml", "tables", "eulerian"}).code == 2);
  auto bad = run({"stat", "1 1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run({"tables", "eulerian", "--r", "9"}).code == 2);
  CHECK(run({"--max-n", "6", "poly", "eulerian", "--n", "7", "--method", "enumeration"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"map", "6 4 1 2 5 3", "prime"}).code == 2);
}

TEST_CASE("verify suites pass at a small budget and are sorted by id") {
  for (const char* suite : {"chapter1", "chapter2", "chapter5"}) {
    CAPTURE(suite);
    auto o = run({"--max-n", "6", "--format", "json", "verify", suite});
    CHECK(o.code == 0);
    auto j = nlohmann::json::parse(o.out);
    CHECK(j["failed"] == 0);
    CHECK(j["passed"].get<int>() > 0);
    std::vector<std::string> ids;
    for (const auto& e : j["entries"]) ids.push_back(e["id"]);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
  }
  auto s = run({"--max-n", "6", "--order", "6", "verify", "series"});
  CHECK(s.code == 0);
  CHECK(s.out.find("FAIL") == std::string::npos);
}

TEST_CASE("failing entries render their witness") {
  cli::Report r{"demo", {{"a", "n=1", Witness{true, "1", "1", ""}}, {"b", "n=2", Witness{false, "3", "4", "off by one"}}}, 0};
  CHECK(r.failures() == 1);
  auto text = cli::render(r, cli::Format::Text, false);
  CHECK(text.find("FAIL  b  n=2\n      off by one\n      lhs: 3\n      rhs: 4\n") != std::string::npos);
  CHECK(text.find("demo: 1 passed, 1 failed") != std::string::npos);
  auto csv = cli::render(r, cli::Format::Csv, false);
  CHECK(csv == "id,params,status,lhs,rhs,detail\na,n=1,pass,,,\nb,n=2,fail,3,4,off by one\n");
}
