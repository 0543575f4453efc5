#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "binfact/baseline.hpp"
#include "binfact/execution.hpp"
#include "binfact/experiments.hpp"
#include "binfact/primes.hpp"

namespace binfact {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  ExperimentPlan plan = default_plan();
  // CSV artifacts go here; empty disables emission.
  std::filesystem::path output_dir;
  // Series missing from the file are recorded into it; present ones must not regress.
  std::filesystem::path baseline_path;
  Execution exec = Execution::parallel;
};

// Mutable state shared by the checks of one verification run.
class VerifyContext {
 public:
  VerifyContext(const PrimeTable& table, VerifyOptions options);

  const PrimeTable& table() const noexcept { return *table_; }
  const VerifyOptions& options() const noexcept { return options_; }
  double tolerance(const std::string& name) const;

  // Non-regression against the loaded baseline, or records the series when
  // it has none. Returns a failure description, empty when fine.
  std::string baseline_gate(const std::string& label, const Baselines::Points& measured);

  // Writes newly recorded series back to baseline_path.
  void flush_baselines() const;

  std::filesystem::path artifact(const std::string& filename) const;
  bool emits_artifacts() const noexcept { return !options_.output_dir.empty(); }

 private:
  const PrimeTable* table_;
  VerifyOptions options_;
  Baselines baselines_;
  bool dirty_ = false;
};

struct Criterion {
  std::string id;  // "1" .. "11"
  Suite suite;
  std::string title;
  std::function<std::vector<CheckResult>(VerifyContext&)> run;
};

// One entry per acceptance criterion that runs inside the library.
const std::vector<Criterion>& criteria();

// Sieve limit large enough for every criterion in `suites`.
std::uint64_t required_limit(const std::set<Suite>& suites);

std::vector<CheckResult> run_verification(VerifyContext& ctx, const std::set<Suite>& suites);

}  // namespace binfact
