#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "binfact/cli.hpp"

namespace fs = std::filesystem;
using binfact::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "binfact_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

}  // namespace

TEST_CASE("stats prints the digit statistics") {
  const auto r = call({"stats", "--n", "35", "--p", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d=5") != std::string::npos);
  CHECK(r.out.find("S=175") != std::string::npos);
  CHECK(r.out.find("nu=30") != std::string::npos);
}

TEST_CASE("stats at a real cutoff, with the clamp warning") {
  const auto r = call({"stats", "--n", "4", "--x", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("logG=4.564") != std::string::npos);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("limits writes grid + 1 rows") {
  const auto dir = scratch() / "limits";
  const auto r = call({"limits", "--grid", "1000", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(line_count(dir / "curves.csv") == 1002);
}

TEST_CASE("sweep and bc write their files") {
  const auto dir = scratch() / "sweep";
  CHECK(call({"sweep", "--n", "1000", "--alphas", "0.25,0.5,1", "--out", dir.string()}).code == 0);
  CHECK(line_count(dir / "sweep_n1000.csv") == 4);
  CHECK(call({"bc", "--n", "500", "--alpha", "0.5", "--out", dir.string()}).code == 0);
  CHECK(line_count(dir / "bc_sweep_n500.csv") == 2);
}

TEST_CASE("sieve with cache") {
  const auto cache = scratch() / "primes.bin";
  fs::remove(cache);
  const auto a = call({"--cache", cache.string(), "sieve", "--limit", "1000000"});
  CHECK(a.code == 0);
  CHECK(a.out.find("pi 78498") != std::string::npos);
  CHECK(fs::exists(cache));
  const auto b = call({"--cache", cache.string(), "sieve", "--limit", "1000000"});
  CHECK(b.out == a.out);
}

TEST_CASE("validation errors exit 1 and name the flag") {
  auto r = call({"stats", "--n", "35", "--p", "9"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--p") != std::string::npos);
  r = call({"sweep", "--n", "100", "--alpha", "1.5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--alpha") != std::string::npos);
  r = call({"sieve", "--limit", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--limit") != std::string::npos);
  r = call({"verify", "--suite", "nonsense"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--suite") != std::string::npos);
  CHECK(call({"stats", "--n", "10", "--bogus", "1"}).code == 1);
  CHECK(call({}).code == 1);
  CHECK(call({"--threads", "-2", "limits"}).code == 1);
  CHECK(call({"stats", "--n", "abc", "--p", "2"}).code == 1);
}

TEST_CASE("help documents every flag") {
  const auto r = call({"--help"});
  CHECK(r.code == 0);
  for (const char* sub : {"sieve", "stats", "sweep", "limits", "bc", "verify", "--threads", "--cache"}) {
    CHECK(r.out.find(sub) != std::string::npos);
  }
  const auto v = call({"verify", "--help"});
  for (const char* flag : {"--suite", "--out", "--baseline", "--limit"}) CHECK(v.out.find(flag) != std::string::npos);
  const auto s = call({"sweep", "--help"});
  for (const char* flag : {"--n", "--alpha", "--alphas", "--out"}) CHECK(s.out.find(flag) != std::string::npos);
}

TEST_CASE("verify core passes and reports one line per check") {
  const auto dir = scratch() / "verify";
  const auto r = call({"verify", "--suite", "core", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS 1 ") != std::string::npos);
  CHECK(r.out.find("PASS 5 ") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify exits 2 when a baseline regresses") {
  const auto dir = scratch() / "regress";
  fs::create_directories(dir);
  const auto base = dir / "baselines.json";
  std::ofstream(base) << R"({"bc_half": [[1000, 0.0], [10000, 0.0], [100000, 0.0], [1000000, 0.0]]})";
  const auto r = call({"verify", "--suite", "bc", "--baseline", base.string()});
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL 11.half") != std::string::npos);
}
