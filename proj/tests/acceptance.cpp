// Acceptance runner. One PASS/FAIL line per criterion, sub-checks indented
// below it. `--only ID` restricts the run to one criterion (ctest uses this).
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "binfact/experiments.hpp"
#include "binfact/primes.hpp"
#include "binfact/verify.hpp"

namespace fs = std::filesystem;
using namespace binfact;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string("\"") + BINFACT_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Criterion 12: `verify --suite all` at two thread counts, CSVs compared byte for byte.
CheckResult determinism() {
  const fs::path root = fs::temp_directory_path() / "binfact_acceptance_determinism";
  fs::remove_all(root);
  std::map<int, int> codes;
  for (int threads : {1, 4}) {
    const fs::path dir = root / ("t" + std::to_string(threads));
    fs::create_directories(dir);
    codes[threads] = run_cli("--threads " + std::to_string(threads) + " verify --suite all --out \"" +
                                 dir.string() + "\"",
                             root / ("log" + std::to_string(threads) + ".txt"));
  }
  std::set<std::string> names;
  for (int threads : {1, 4}) {
    for (const auto& e : fs::directory_iterator(root / ("t" + std::to_string(threads)))) {
      if (e.path().extension() == ".csv") names.insert(e.path().filename().string());
    }
  }
  std::size_t differing = 0;
  for (const auto& name : names) {
    if (slurp(root / "t1" / name) != slurp(root / "t4" / name) || !fs::exists(root / "t1" / name) ||
        !fs::exists(root / "t4" / name)) {
      ++differing;
    }
  }
  // Exit 2 only reports failed checks; the run itself must complete the same way twice.
  const bool ran = (codes[1] == 0 || codes[1] == 2) && codes[1] == codes[4];
  const bool ok = ran && !names.empty() && differing == 0;
  return {"12", "verify --suite all at --threads 1 and 4 gives byte-identical CSVs", ok,
          std::to_string(names.size()) + " CSV files, " + std::to_string(differing) + " differ; exit codes " +
              std::to_string(codes[1]) + "/" + std::to_string(codes[4])};
}

std::string criterion_of(const std::string& check_id) { return check_id.substr(0, check_id.find('.')); }

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  fs::path baseline = BINFACT_BASELINE_PATH;
  fs::path out;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = argv[++i];
    } else if (a == "--baseline" && i + 1 < argc) {
      baseline = argv[++i];
    } else if (a == "--out" && i + 1 < argc) {
      out = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--only ID] [--baseline PATH] [--out DIR]\n";
      return 1;
    }
  }

  std::set<Suite> suites;
  for (const auto& c : criteria()) {
    if (only.empty() || only == c.id) suites.insert(c.suite);
  }

  std::cout << "tolerances:";
  for (const auto& [name, v] : default_tolerances()) std::cout << " " << name << "=" << v;
  std::cout << "\n";

  std::map<std::string, std::vector<CheckResult>> by_criterion;
  if (!suites.empty()) {
    const PrimeTable table = sieve(required_limit(suites));
    VerifyOptions opts;
    opts.plan.suites = suites;
    opts.baseline_path = baseline;
    opts.output_dir = out;
    VerifyContext ctx(table, opts);
    for (const auto& c : criteria()) {
      if (!only.empty() && only != c.id) continue;
      for (auto& r : c.run(ctx)) by_criterion[criterion_of(r.id)].push_back(std::move(r));
    }
    ctx.flush_baselines();
  }
  if (only.empty() || only == "12") by_criterion["12"].push_back(determinism());

  if (by_criterion.empty()) {
    std::cerr << "no criterion '" << only << "'\n";
    return 1;
  }

  std::map<std::string, std::string> titles{{"12", "determinism across thread counts"}};
  for (const auto& c : criteria()) titles[c.id] = c.title;

  int failed = 0;
  for (int id = 1; id <= 12; ++id) {
    const auto it = by_criterion.find(std::to_string(id));
    if (it == by_criterion.end()) continue;
    bool ok = true;
    for (const auto& r : it->second) ok = ok && r.passed;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << titles[it->first] << "\n";
    for (const auto& r : it->second) {
      std::cout << "    " << (r.passed ? "pass " : "fail ") << r.id << " " << r.title << " :: " << r.detail << "\n";
    }
  }
  std::cout << by_criterion.size() - failed << "/" << by_criterion.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
