#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "binfact/execution.hpp"
#include "binfact/primes.hpp"

namespace binfact {

enum class Suite { core, limits, asymptotics, bc, appendix };

std::string to_string(Suite s);
Suite parse_suite(const std::string& name);  // throws DomainError

struct ExperimentPlan {
  std::vector<std::uint64_t> n_values;
  std::vector<double> alpha_grid;
  std::set<Suite> suites;
  std::filesystem::path output_dir;
  std::map<std::string, double> tolerances;

  // Throws DomainError naming the first violated invariant.
  void validate() const;
};

// Tolerance names each suite reads from ExperimentPlan::tolerances.
std::vector<std::string> required_tolerances(Suite s);

// The pinned tolerance ledger used by `verify`.
std::map<std::string, double> default_tolerances();

// {0.01 k : k = 1..100} with every 1/j and 1/j +- 1e-6 for j = 1..20,
// restricted to (0, 1], sorted and deduplicated.
std::vector<double> default_alpha_grid();

ExperimentPlan default_plan();

// One (n, x = alpha n) evaluation. Main terms are f(alpha) n^2.
struct SweepRow {
  std::uint64_t n = 0;
  double x = 0.0;
  double alpha = 0.0;
  double a_val = 0.0;
  double b_val = 0.0;
  double log_g = 0.0;
  double a0 = 0.0;
  double b0 = 0.0;
  double g0 = 0.0;
  double resid_a = 0.0;
  double resid_b = 0.0;
  double resid_g = 0.0;
};

std::vector<SweepRow> sweep_alpha(const PrimeTable& table, std::uint64_t n, const std::vector<double>& alpha_grid,
                                  Execution exec = Execution::parallel);

struct ResidualPoint {
  std::uint64_t n = 0;
  double residual = 0.0;
  double normalized = 0.0;
};

struct ResidualSeries {
  std::string label;
  std::vector<ResidualPoint> points;
};

enum class Quantity { a, b, g };

// residual = value(n, alpha n) - f(alpha) n^2, normalized = |residual| / n^2.
ResidualSeries convergence_series(const PrimeTable& table, const std::vector<std::uint64_t>& n_values,
                                  double alpha, Quantity q, Execution exec = Execution::parallel);

// A(n,x) / (pi(x) n ln n) and B(n,x) / (pi(x) n ln n / 2).
struct StarRatios {
  double a_ratio = 0.0;
  double b_ratio = 0.0;
};

StarRatios star_comparison(const PrimeTable& table, std::uint64_t n, double x, Execution exec = Execution::parallel);

// Residuals against the theta-based main terms: B ~ theta(x) n / 2,
// A ~ theta(x) n, log G ~ theta(x) n / 2.
struct AppendixResiduals {
  double b_resid = 0.0;
  double a_resid = 0.0;
  double g_resid = 0.0;
  double main_b = 0.0;       // theta(x) n / 2
  double b_bound = 0.0;      // x^{5/4} n^{3/4} (ln n)^{7/2} + n^{5/3} ln n
  double ag_bound = 0.0;     // x^{5/4} n^{3/4} (ln n)^{7/2} + n^{5/3} (ln n)^2
  bool in_stated_range = true;  // n^{2/3} <= x <= n
};

AppendixResiduals appendix_main_term(const PrimeTable& table, std::uint64_t n, double x,
                                     Execution exec = Execution::parallel);

// log G_BC(2n, 2 alpha n) against f_bc(alpha) 2n.
struct BcSweepRow {
  std::uint64_t n = 0;
  double x = 0.0;
  double alpha = 0.0;
  double log_g_bc = 0.0;
  double main = 0.0;
  double resid = 0.0;
};

std::vector<BcSweepRow> bc_sweep(const PrimeTable& table, std::uint64_t n, const std::vector<double>& alpha_grid,
                                 Execution exec = Execution::parallel);

}  // namespace binfact
