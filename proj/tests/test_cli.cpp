#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = prook::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "-n", "2", "-c", "1"}).out == "6\n");
  CHECK(run({"count", "-n", "0", "-c", "3"}).out == "1\n");
  CHECK(run({"count", "-n", "1", "-c", "4"}).out == "5\n");
  CHECK(run({"count", "-n", "5", "-c", "3"}).out == "31504\n");
  const Run b = run({"count", "-n", "2", "-c", "1", "--breakdown"});
  CHECK(b.code == 0);
  CHECK(b.out == "6\n2|0 1\n1|1 4\n0|2 1\n");
  CHECK(run({"count", "-n", "2"}).code == prook::cli::kExitUsage);
  CHECK(run({"count", "-n", "2", "-c", "0"}).code == prook::cli::kExitUsage);
}

TEST_CASE("enumerate") {
  const Run r = run({"enumerate", "-n", "2", "-c", "1"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(r.out.rfind("n=2 c=1 []\n", 0) == 0);
  const Run j = run({"enumerate", "-n", "1", "-c", "2", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out).size() == 3);
  const Run capped = run({"enumerate", "-n", "5", "-c", "3", "--cap", "100"});
  CHECK(capped.code == prook::cli::kExitUsage);
  CHECK(capped.err.find("cap exceeded") != std::string::npos);
}

TEST_CASE("mul") {
  const std::string d1 = "n=3 c=2 [1-1:1, 2-3:1, 3-2:1]";
  const std::string d2 = "n=3 c=2 [1-2:1, 3-1:2]";
  CHECK(run({"mul", d1, d2}).out == "n=3 c=2 [1-2:1]\n");
  CHECK(run({"mul", d1, d2, "--as-matrix"}).out == "0 u1 0\n0 0 0\n0 0 0\n");
  CHECK(run({"mul", d1, "n=2 c=2 []"}).code == prook::cli::kExitUsage);
  const Run bad = run({"mul", d1, "n=3 c=2 [1-2;1]"});
  CHECK(bad.code == prook::cli::kExitUsage);
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"mul", "--spot-check", "20", "-n", "3", "-c", "2"}).code == 0);
}

TEST_CASE("xbasis") {
  CHECK(run({"xbasis", "n=2 c=1 [1-1:1]"}).out == "-1 * n=2 c=1 [] + 1 * n=2 c=1 [1-1:1]\n");
  CHECK(run({"xbasis", "n=2 c=1 [1-2:1, 2-1:1]"}).code == prook::cli::kExitUsage);
}

TEST_CASE("chartable") {
  const Run r = run({"chartable", "-n", "2", "-c", "1", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out == "vertical_counts,2|0,1|1,0|2\n0,1,0,0\n1,1,1,0\n2,1,2,1\n");
  CHECK(run({"chartable", "-n", "2", "-c", "1", "--format", "tsv"}).code == prook::cli::kExitUsage);
}

TEST_CASE("bratteli") {
  const Run r = run({"bratteli", "-c", "1", "-n", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["levels"].size() == 5);
  for (int n = 0; n <= 4; ++n) CHECK(j["levels"][n].size() == static_cast<std::size_t>(n + 1));
  CHECK(run({"bratteli", "-c", "2", "-n", "2"}).out.rfind("digraph bratteli {", 0) == 0);
  const Run xml = run({"bratteli", "-c", "2", "-n", "2", "--format", "xml"});
  CHECK(xml.code == prook::cli::kExitUsage);
  CHECK_FALSE(xml.err.empty());

  const auto path = std::filesystem::temp_directory_path() / "prook_test_cli_bratteli.dot";
  CHECK(run({"bratteli", "-c", "2", "-n", "3", "--out", path.string()}).out.empty());
  CHECK(slurp(path) == run({"bratteli", "-c", "2", "-n", "3"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "-n", "0", "-c", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["n_cap"] == 0);
  const Run m = run({"verify", "-n", "2", "-c", "1", "--inject-mutant"});
  CHECK(m.code == prook::cli::kExitVerificationFailed);
  CHECK(m.err.find("FAIL") != std::string::npos);
}

TEST_CASE("environment overrides") {
  setenv("PROOK_N_CAP", "1", 1);
  setenv("PROOK_C_CAP", "1", 1);
  const Run r = run({"verify"});
  unsetenv("PROOK_N_CAP");
  unsetenv("PROOK_C_CAP");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n_cap"] == 1);
  CHECK(j["c_cap"] == 1);

  setenv("PROOK_CAP", "10", 1);
  const Run capped = run({"enumerate", "-n", "3", "-c", "2"});
  unsetenv("PROOK_CAP");
  CHECK(capped.code == prook::cli::kExitUsage);
}
