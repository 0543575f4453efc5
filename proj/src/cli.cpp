#include "binfact/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>

#include "binfact/csv.hpp"
#include "binfact/error.hpp"
#include "binfact/execution.hpp"
#include "binfact/experiments.hpp"
#include "binfact/factorstats.hpp"
#include "binfact/limits.hpp"
#include "binfact/primes.hpp"
#include "binfact/radix.hpp"
#include "binfact/verify.hpp"

namespace binfact::cli {

namespace {

struct Config {
  std::uint64_t n = 0;
  std::optional<double> x;
  std::optional<std::uint64_t> p;
  std::optional<double> alpha;
  std::vector<double> alphas;
  std::uint64_t limit = 0;  // 0: smallest limit the subcommand needs
  std::uint64_t grid = 1000;
  std::string suite = "all";
  std::string out = ".";
  std::string cache;
  std::string baseline;
  int threads = 0;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

PrimeTable load_table(const Config& cfg, std::uint64_t needed) {
  if (cfg.limit != 0) {
    require(cfg.limit >= needed, "--limit: must be at least " + std::to_string(needed) + " for this command");
  }
  const std::uint64_t limit = std::max<std::uint64_t>({cfg.limit, needed, 2});
  return sieve_cached(limit, cfg.cache);
}

std::vector<double> alpha_grid(const Config& cfg) {
  std::vector<double> grid = cfg.alphas;
  if (cfg.alpha) grid.push_back(*cfg.alpha);
  if (grid.empty()) return default_alpha_grid();
  for (double a : grid) require(a > 0.0 && a <= 1.0, "--alpha/--alphas: values must lie in (0, 1]");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

int cmd_sieve(const Config& cfg, std::ostream& out) {
  require(cfg.limit >= 2, "--limit: required, must be >= 2");
  require(cfg.limit <= kMaxSieveLimit, "--limit: must be <= 2^40");
  const PrimeTable t = load_table(cfg, cfg.limit);
  const double lim = static_cast<double>(t.limit());
  out << "limit " << t.limit() << "\n";
  out << "pi " << t.size() << "\n";
  out << "largest " << (t.size() ? t.primes().back() : 0) << "\n";
  out << "theta " << format_double(theta(t, lim)) << "\n";
  out << "psi " << format_double(psi(t, lim)) << "\n";
  return kOk;
}

int cmd_stats(const Config& cfg, std::ostream& out, std::ostream& err) {
  require(cfg.n >= 1, "--n: required, must be >= 1");
  require(cfg.p || cfg.x, "stats: give --p and/or --x");
  if (cfg.p) {
    require(*cfg.p >= 2 && *cfg.p <= cfg.n, "--p: must satisfy 2 <= p <= n");
    const PrimeTable t = load_table(cfg, cfg.n);
    require(t.is_prime(*cfg.p), "--p: must be prime");
    const auto rec = nu_p(t, *cfg.p, cfg.n);
    out << "n=" << cfg.n << " p=" << rec.p << " digits=";
    const auto dig = digits(rec.p, cfg.n);
    for (std::size_t i = dig.size(); i-- > 0;) out << dig[i] << (i ? " " : "");
    out << " d=" << rec.d << " S=" << to_string(rec.s) << " nu=" << to_string(rec.nu) << "\n";
  }
  if (cfg.x) {
    require(std::isfinite(*cfg.x) && *cfg.x >= 0.0, "--x: must be a finite real >= 0");
    const PrimeTable t = load_table(cfg, cfg.n);
    const auto s = partial_sums(t, cfg.n, *cfg.x);
    if (s.clamped) err << "warning: --x exceeds --n; sums are taken at x = n\n";
    out << "n=" << cfg.n << " x=" << format_double(std::min(*cfg.x, static_cast<double>(cfg.n)))
        << " A=" << format_double(s.a) << " B=" << format_double(s.b) << " logG=" << format_double(s.log_g)
        << "\n";
  }
  return kOk;
}

int cmd_sweep(const Config& cfg, std::ostream& out) {
  require(cfg.n >= 2, "--n: required, must be >= 2");
  const auto grid = alpha_grid(cfg);
  const PrimeTable t = load_table(cfg, cfg.n);
  const auto rows = sweep_alpha(t, cfg.n, grid);
  const auto path = std::filesystem::path(cfg.out) / sweep_filename(cfg.n);
  emit_csv(rows, path);
  double worst = 0.0;
  for (const auto& r : rows) {
    if (r.alpha >= 0.05) worst = std::max(worst, std::abs(r.resid_g) / (static_cast<double>(cfg.n) * cfg.n));
  }
  out << rows.size() << " rows -> " << path.string() << "\n";
  out << "max_{alpha>=0.05} |resid_g|/n^2 = " << format_double(worst) << "\n";
  return kOk;
}

int cmd_limits(const Config& cfg, std::ostream& out) {
  require(cfg.grid >= 1 && cfg.grid <= 100'000'000, "--grid: must lie in [1, 1e8]");
  std::vector<CurveSample> samples;
  samples.reserve(cfg.grid + 1);
  for (std::uint64_t k = 0; k <= cfg.grid; ++k) {
    samples.push_back(curve_sample(static_cast<double>(k) / static_cast<double>(cfg.grid)));
  }
  const auto path = std::filesystem::path(cfg.out) / "curves.csv";
  emit_csv(samples, path);
  out << samples.size() << " rows -> " << path.string() << "\n";
  return kOk;
}

int cmd_bc(const Config& cfg, std::ostream& out) {
  require(cfg.n >= 1, "--n: required, must be >= 1");
  require(cfg.n <= kMaxSieveLimit / 2, "--n: 2n must be <= 2^40");
  const auto grid = alpha_grid(cfg);
  const PrimeTable t = load_table(cfg, 2 * cfg.n);
  const auto rows = bc_sweep(t, cfg.n, grid);
  const auto path = std::filesystem::path(cfg.out) / bc_sweep_filename(cfg.n);
  emit_csv(rows, path);
  out << rows.size() << " rows -> " << path.string() << "\n";
  for (const auto& r : rows) {
    if (r.alpha == 0.5 || r.alpha == 1.0) {
      out << "alpha=" << format_double(r.alpha) << " logG_BC/(2n)=" << format_double(r.log_g_bc / (2.0 * cfg.n))
          << " f_bc=" << format_double(f_bc(r.alpha)) << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  std::set<Suite> suites;
  if (cfg.suite == "all") {
    suites = {Suite::core, Suite::limits, Suite::asymptotics, Suite::bc, Suite::appendix};
  } else {
    try {
      suites = {parse_suite(cfg.suite)};
    } catch (const DomainError&) {
      throw ValidationError("--suite: must be one of core|limits|asymptotics|bc|appendix|all");
    }
  }
  const PrimeTable t = load_table(cfg, required_limit(suites));
  VerifyOptions opts;
  opts.plan.suites = suites;
  opts.output_dir = cfg.out;
  opts.baseline_path = cfg.baseline;
  VerifyContext ctx(t, opts);
  const auto results = run_verification(ctx, suites);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.title << " :: " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"binfact: prime-partial factorizations of binomial-row products"};
  app.require_subcommand(1);
  Config cfg;

  app.add_option("--threads", cfg.threads, "OpenMP threads, 0 = all processors")
      ->check(CLI::Range(0, 4096));
  app.add_option("--cache", cfg.cache, "binary prime cache reused across runs");

  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", cfg.limit, "sieve limit (default: smallest that suffices)");
  };

  auto* sieve_cmd = app.add_subcommand("sieve", "sieve primes and print pi, theta, psi at the limit");
  add_limit(sieve_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "digit statistics of one prime, or A, B, log G at one x");
  stats_cmd->add_option("--n", cfg.n, "row index n")->required();
  stats_cmd->add_option("--p", cfg.p, "prime p <= n");
  stats_cmd->add_option("--x", cfg.x, "real cutoff x; x > n is clamped");
  add_limit(stats_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "A, B, log G over x = alpha n, writes sweep_n<N>.csv");
  sweep_cmd->add_option("--n", cfg.n, "row index n")->required();
  sweep_cmd->add_option("--alpha", cfg.alpha, "single alpha in (0, 1]");
  sweep_cmd->add_option("--alphas", cfg.alphas, "comma separated alphas")->delimiter(',');
  sweep_cmd->add_option("--out", cfg.out, "output directory");
  add_limit(sweep_cmd);

  auto* limits_cmd = app.add_subcommand("limits", "tabulate f_a, f_b, f_g, f_bc, writes curves.csv");
  limits_cmd->add_option("--grid", cfg.grid, "intervals on [0, 1]; grid + 1 rows");
  limits_cmd->add_option("--out", cfg.out, "output directory");

  auto* bc_cmd = app.add_subcommand("bc", "central binomial sweep over x = 2 alpha n, writes bc_sweep_n<N>.csv");
  bc_cmd->add_option("--n", cfg.n, "C(2n, n)")->required();
  bc_cmd->add_option("--alpha", cfg.alpha, "single alpha in (0, 1]");
  bc_cmd->add_option("--alphas", cfg.alphas, "comma separated alphas")->delimiter(',');
  bc_cmd->add_option("--out", cfg.out, "output directory");
  add_limit(bc_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run acceptance checks; exit 2 on any failure");
  verify_cmd->add_option("--suite", cfg.suite, "core|limits|asymptotics|bc|appendix|all")
      ->check(CLI::IsMember({"core", "limits", "asymptotics", "bc", "appendix", "all"}));
  verify_cmd->add_option("--out", cfg.out, "directory for CSV artifacts");
  verify_cmd->add_option("--baseline", cfg.baseline, "baselines.json; missing series are recorded");
  add_limit(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    set_thread_count(cfg.threads);
    if (sieve_cmd->parsed()) return cmd_sieve(cfg, out);
    if (stats_cmd->parsed()) return cmd_stats(cfg, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
    if (limits_cmd->parsed()) return cmd_limits(cfg, out);
    if (bc_cmd->parsed()) return cmd_bc(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kValidation;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace binfact::cli
