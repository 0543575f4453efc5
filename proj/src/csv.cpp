#include "binfact/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "binfact/error.hpp"

namespace binfact {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  if (!f) throw IoError("write failed for " + path.string());
}

template <typename... Ts>
void row(std::ostringstream& os, const Ts&... fields) {
  bool first = true;
  auto put = [&](const auto& v) {
    if (!first) os << ',';
    first = false;
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(v)>>) {
      os << format_double(v);
    } else {
      os << v;
    }
  };
  (put(fields), ...);
  os << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "n,x,alpha,a_val,b_val,log_g,a0,b0,g0,resid_a,resid_b,resid_g\n";
  for (const auto& r : rows) {
    row(os, r.n, r.x, r.alpha, r.a_val, r.b_val, r.log_g, r.a0, r.b0, r.g0, r.resid_a, r.resid_b, r.resid_g);
  }
  write_file(path, os.str());
}

void emit_csv(const std::vector<CurveSample>& samples, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "alpha,f_a,f_b,f_g,f_bc\n";
  for (const auto& s : samples) row(os, s.alpha, s.f_a, s.f_b, s.f_g, s.f_bc);
  write_file(path, os.str());
}

void emit_csv(const ResidualSeries& series, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "n,residual,normalized\n";
  for (const auto& p : series.points) row(os, p.n, p.residual, p.normalized);
  write_file(path, os.str());
}

void emit_csv(const std::vector<BcSweepRow>& rows, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "n,x,alpha,log_g_bc,main,resid\n";
  for (const auto& r : rows) row(os, r.n, r.x, r.alpha, r.log_g_bc, r.main, r.resid);
  write_file(path, os.str());
}

std::string sweep_filename(std::uint64_t n) { return "sweep_n" + std::to_string(n) + ".csv"; }
std::string bc_sweep_filename(std::uint64_t n) { return "bc_sweep_n" + std::to_string(n) + ".csv"; }
std::string series_filename(const std::string& label) { return "series_" + label + ".csv"; }

}  // namespace binfact
