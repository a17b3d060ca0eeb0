#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "knapsack/knapsack.hpp"
#include "knapsack_cli/cli.hpp"

namespace {

namespace fs = std::filesystem;
using knapsack::cli::run;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::path(KNAPSACK_TEST_TMP) / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("solve: every algorithm prints the optimum") {
  const std::string file = write_temp("two.txt", "2 4\n2 3\n3 4\n");
  for (const char* algo : {"auto", "proximity", "bellman", "brute"}) {
    const auto r = call({"solve", file, "--algo", algo});
    CHECK(r.code == 0);
    CHECK(r.out == "OPT 4\n");
  }
  const auto empty = call({"solve", write_temp("empty.txt", "0 5\n")});
  CHECK(empty.out == "OPT 0\n");
}

TEST_CASE("solve: stats and bounded files") {
  const std::string file = write_temp("bounded.txt", "# one item\n1 9\n2 3 5\n");
  auto r = call({"solve", file, "--stats"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("OPT 12\n", 0) == 0);
  CHECK(r.out.find("parts ") != std::string::npos);
  CHECK(r.out.find("total_ms ") != std::string::npos);

  r = call({"solve", file, "--algo", "proximity"});
  CHECK(r.code == knapsack::cli::kUsage);
  CHECK(r.err.find("0-1 instance") != std::string::npos);
}

TEST_CASE("solve: error exit codes") {
  auto r = call({"solve", write_temp("bad.txt", "2 4\n2 3\n")});
  CHECK(r.code == knapsack::cli::kUsage);
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(call({"solve", "/nonexistent/file"}).code == knapsack::cli::kUsage);
  CHECK(call({"solve"}).code == knapsack::cli::kUsage);
  CHECK(call({"frobnicate"}).code == knapsack::cli::kUsage);
  CHECK(call({"solve", "x", "--algo", "magic"}).code == knapsack::cli::kUsage);

  // 30 items is past the enumeration budget.
  std::string many = "30 10\n";
  for (int i = 0; i < 30; ++i) many += "1 1\n";
  r = call({"solve", write_temp("many.txt", many), "--algo", "brute"});
  CHECK(r.code == knapsack::cli::kBudget);
  CHECK(call({"solve", write_temp("many2.txt", many), "--algo", "auto"}).out == "OPT 10\n");

  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("gen: deterministic, header-only for n = 0") {
  const auto a = call({"gen", "--seed", "5", "--n", "20", "--w-max", "9", "--p-max", "50", "--u-max", "3"});
  const auto b = call({"gen", "--seed", "5", "--n", "20", "--w-max", "9", "--p-max", "50", "--u-max", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto parsed = knapsack::parse_instance(a.out);
  CHECK(parsed.instance.size() == 20);
  for (const auto& it : parsed.instance.items) CHECK(it.weight <= 9);

  CHECK(call({"gen", "--n", "0", "--w-max", "3", "--p-max", "3"}).out == "0 0\n");
  CHECK(call({"gen", "--n", "2", "--w-max", "3", "--p-max", "3", "--capacity", "77"}).out.rfind("2 77\n", 0) == 0);
  CHECK(call({"gen", "--n", "2", "--w-max", "0", "--p-max", "3"}).code == knapsack::cli::kUsage);
  CHECK(call({"gen", "--n", "2", "--w-max", "3", "--p-max", "3", "--fraction", "2"}).code == knapsack::cli::kUsage);
}

TEST_CASE("gen output solves identically with every algorithm in budget") {
  for (int seed = 0; seed < 20; ++seed) {
    const auto g = call({"gen", "--seed", std::to_string(seed), "--n", "14", "--w-max", "12", "--p-max", "40"});
    const std::string file = write_temp("gen" + std::to_string(seed) + ".txt", g.out);
    const std::string expected = call({"solve", file, "--algo", "bellman"}).out;
    for (const char* algo : {"auto", "proximity", "brute"}) CHECK(call({"solve", file, "--algo", algo}).out == expected);
  }
}

TEST_CASE("verify: passes on the default grid, reports a counterexample otherwise") {
  auto r = call({"verify", "--trials", "100", "--out-dir", KNAPSACK_TEST_TMP});
  CHECK(r.code == 0);
  CHECK(r.out == "OK 100/100\n");

  // A tiny proximity constant turns the solver into a heuristic; the
  // oracle must catch it on some instance.
  r = call({"verify", "--trials", "500", "--delta-constant", "1e-9", "--n-max", "30", "--w-max", "10",
            "--out-dir", KNAPSACK_TEST_TMP});
  CHECK(r.code == knapsack::cli::kMismatch);
  const auto pos = r.err.find("instance written to ");
  REQUIRE(pos != std::string::npos);
  std::string path = r.err.substr(pos + 20);
  path.erase(path.find_last_not_of('\n') + 1);
  CHECK(fs::exists(path));
  CHECK_NOTHROW(knapsack::read_instance_file(path));
}

TEST_CASE("bench: CSV rows") {
  const auto r = call({"bench", "--seeds", "1,2", "--n", "50", "--w-max", "5,10", "--algo", "auto,bellman"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "seed,n,w_max,algo,micros,value");
  int rows = 0;
  std::map<std::string, std::string> value_by_instance;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    REQUIRE(cols.size() == 6);
    const std::string key = cols[0] + "/" + cols[2];
    if (value_by_instance.count(key) != 0) CHECK(value_by_instance[key] == cols[5]);
    value_by_instance[key] = cols[5];
  }
  CHECK(rows == 8);
}
