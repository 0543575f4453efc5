#include "binfact/limits.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "binfact/error.hpp"
#include "binfact/summation.hpp"

namespace binfact {

namespace {

void check_alpha(double alpha, const char* what) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError(std::string(what) + ": alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

// H_{2K} - H_K = sum_{k=1}^{K} (1/(2k-1) - 1/(2k)): total length of the
// slope-1 pieces of f_bc lying above 1/(2K).
double slope_one_length(std::uint64_t pairs) {
  if (2 * pairs > kHarmonicDirectMax) return harmonic(2 * pairs) - harmonic(pairs);
  CompensatedSum acc;
  for (std::uint64_t k = pairs; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    acc.add(1.0 / (2.0 * kk - 1.0) - 1.0 / (2.0 * kk));
  }
  return acc.value();
}

}  // namespace

double harmonic(std::uint64_t m) {
  if (m > kHarmonicDirectMax) {
    const double mm = static_cast<double>(m);
    return std::log(mm) + kEulerGamma + 1.0 / (2.0 * mm) - 1.0 / (12.0 * mm * mm);
  }
  CompensatedSum acc;
  for (std::uint64_t j = m; j >= 1; --j) acc.add(1.0 / static_cast<double>(j));
  return acc.value();
}

std::uint64_t floor_reciprocal(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("floor_reciprocal: alpha must lie in (0, 1]");
  const double guess = std::floor(1.0 / alpha);
  if (guess > 0x1p53) throw DomainError("floor_reciprocal: alpha too small to resolve 1/alpha exactly");
  auto j = static_cast<std::uint64_t>(guess);
  // Largest j with j * alpha <= 1.
  while (std::fma(static_cast<double>(j), alpha, -1.0) > 0.0) --j;
  while (std::fma(static_cast<double>(j + 1), alpha, -1.0) <= 0.0) ++j;
  return j;
}

double f_g(double alpha) {
  check_alpha(alpha, "f_g");
  if (alpha == 0.0) return 0.0;
  const double j = static_cast<double>(floor_reciprocal(alpha));
  return 0.5 - j * alpha + 0.5 * j * (j + 1.0) * alpha * alpha;
}

double f_b(double alpha) {
  check_alpha(alpha, "f_b");
  if (alpha == 0.0) return 0.0;
  const std::uint64_t j = floor_reciprocal(alpha);
  const double jd = static_cast<double>(j);
  return (1.0 - kEulerGamma) + (harmonic(j) + std::log(alpha)) - alpha * jd;
}

double f_a(double alpha) {
  check_alpha(alpha, "f_a");
  if (alpha == 0.0) return 0.0;
  const std::uint64_t j = floor_reciprocal(alpha);
  const double jd = static_cast<double>(j);
  const double aj = alpha * jd;
  return (1.5 - kEulerGamma) + (harmonic(j) + std::log(alpha)) + 0.5 * aj * aj + 0.5 * alpha * aj - 2.0 * aj;
}

double f_bc(double alpha) {
  check_alpha(alpha, "f_bc");
  if (alpha == 0.0) return 0.0;
  // alpha in [1/(m+1), 1/m]; walk down from f_bc(1) = log 2.
  const std::uint64_t m = floor_reciprocal(alpha);
  const double at_reciprocal = std::numbers::ln2 - slope_one_length(m / 2);
  if (m % 2 == 0) return at_reciprocal;
  const double md = static_cast<double>(m);
  const double gap = -std::fma(md, alpha, -1.0) / md;  // 1/m - alpha
  return at_reciprocal - gap;
}

CurveSample curve_sample(double alpha) { return CurveSample{alpha, f_a(alpha), f_b(alpha), f_g(alpha), f_bc(alpha)}; }

SimplifiedMainTerms simplified_main_terms(std::uint64_t n, double x) {
  if (std::isnan(x) || x < 1.0 || x > static_cast<double>(n)) {
    throw DomainError("simplified_main_terms: need 1 <= x <= n");
  }
  const double nx = static_cast<double>(n) * x;
  return SimplifiedMainTerms{nx, 0.5 * nx};
}

}  // namespace binfact
