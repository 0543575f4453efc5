#include <doctest.h>

#include <cmath>
#include <numbers>

#include "binfact/error.hpp"
#include "binfact/limits.hpp"

using namespace binfact;

namespace {

long double harmonic_ld(std::uint64_t m) {
  long double h = 0;
  for (std::uint64_t j = m; j >= 1; --j) h += 1.0L / j;
  return h;
}

// f_bc from its slope description: ln 2 minus the measure of {t in [alpha, 1] : floor(1/t) odd}.
long double f_bc_oracle(double alpha) {
  long double measure = 0;
  for (std::uint64_t j = 1;; ++j) {
    const long double hi = 1.0L / j;
    const long double lo = 1.0L / (j + 1);
    if (hi <= alpha) break;
    if (j % 2 == 1) measure += hi - std::max<long double>(lo, alpha);
  }
  return std::numbers::ln2_v<long double> - measure;
}

}  // namespace

TEST_CASE("harmonic") {
  CHECK(harmonic(0) == 0.0);
  CHECK(harmonic(1) == 1.0);
  CHECK(harmonic(2) == 1.5);
  CHECK(harmonic(10) == doctest::Approx(7381.0 / 2520).epsilon(1e-15));
  const double tail = harmonic(1'000'000) - std::log(1e6) - kEulerGamma;
  CHECK(tail == doctest::Approx(5e-7).epsilon(1e-4));
  CHECK(harmonic(1'000'000) == doctest::Approx(static_cast<double>(harmonic_ld(1'000'000))).epsilon(1e-15));
  // direct and asymptotic branches meet smoothly
  CHECK(harmonic(kHarmonicDirectMax + 1) - harmonic(kHarmonicDirectMax) ==
        doctest::Approx(1.0 / (kHarmonicDirectMax + 1)).epsilon(1e-6));
}

TEST_CASE("floor_reciprocal at representable neighbours of 1/j") {
  for (std::uint64_t j = 1; j <= 1000; ++j) {
    const double r = 1.0 / static_cast<double>(j);
    const auto fr = floor_reciprocal(r);
    // largest k with k r <= 1; the long double products are exact here
    const long double rl = r;
    CHECK(rl * fr <= 1.0L);
    CHECK(rl * (fr + 1) > 1.0L);
    if (j > 1) CHECK(floor_reciprocal(std::nextafter(r, 2.0)) <= j);
    CHECK(floor_reciprocal(std::nextafter(r, 0.0)) >= j);
  }
  CHECK(floor_reciprocal(1.0) == 1);
  CHECK(floor_reciprocal(0.4) == 2);
  CHECK_THROWS_AS(floor_reciprocal(0.0), DomainError);
  CHECK_THROWS_AS(floor_reciprocal(1e-300), DomainError);
}

TEST_CASE("f_g") {
  for (int j = 1; j <= 10; ++j) CHECK(std::abs(f_g(1.0 / j) - 1.0 / (2.0 * j)) <= 1e-14);
  CHECK(f_g(0.0) == 0.0);
  CHECK(f_g(0.4) == doctest::Approx(0.18).epsilon(1e-15));
  for (double a = 0.001; a <= 1.0; a += 0.00731) {
    const double j = std::floor(1.0 / a);
    const double spec_form = 0.5 + 0.5 * a * a * j * j + 0.5 * a * a * j - a * j;
    CHECK(f_g(a) == doctest::Approx(spec_form).epsilon(1e-13));
  }
  CHECK_THROWS_AS(f_g(-0.1), DomainError);
  CHECK_THROWS_AS(f_g(1.1), DomainError);
  CHECK_THROWS_AS(f_g(std::nan("")), DomainError);
}

TEST_CASE("f_g bounds and monotonicity per piece") {
  constexpr int kGrid = 10'000;
  for (int k = 1; k <= kGrid; ++k) {
    const double a = static_cast<double>(k) / kGrid;
    const double g = f_g(a);
    CHECK(g >= 0.0);
    CHECK(g <= a / 2 + 1e-16);
    if (std::abs(a / 2 - g) <= 1e-12) {
      const double j = std::round(1.0 / a);
      CHECK(std::abs(a - 1.0 / j) <= 1e-6);
    }
  }
  for (int j = 1; j <= 30; ++j) {
    double prev = f_g(1.0 / (j + 1));
    for (int s = 1; s <= 50; ++s) {
      const double a = 1.0 / (j + 1) + (1.0 / j - 1.0 / (j + 1)) * s / 50.0;
      const double g = f_g(std::min(a, 1.0));
      CHECK(g >= prev - 1e-15);
      prev = g;
    }
  }
}

TEST_CASE("f_b and f_a") {
  CHECK(f_b(1.0) == doctest::Approx(1.0 - kEulerGamma).epsilon(1e-15));
  CHECK(f_b(0.0) == 0.0);
  CHECK(f_b(0.5) == doctest::Approx(1.5 - kEulerGamma - std::numbers::ln2).epsilon(1e-14));
  CHECK(f_b(0.5) == doctest::Approx(0.22964).epsilon(1e-5));
  CHECK(f_a(1.0) == doctest::Approx(1.5 - kEulerGamma).epsilon(1e-15));
  CHECK(f_a(0.0) == 0.0);
  CHECK(f_a(0.37) - f_b(0.37) == doctest::Approx(f_g(0.37)).epsilon(1e-14));

  // The decimals printed for 1 - gamma and 3/2 - gamma carry a digit slip of 1e-4.
  CHECK(f_b(1.0) == doctest::Approx(0.42278).epsilon(1e-5));
  CHECK(0.42288 - f_b(1.0) == doctest::Approx(1e-4).epsilon(0.02));
  CHECK(f_a(1.0) == doctest::Approx(0.92278).epsilon(1e-5));

  for (double a = 0.0101; a < 0.99; a += 0.0097) {
    const auto j = static_cast<std::uint64_t>(std::floor(1.0 / a));
    const long double hl = harmonic_ld(j) + std::log(static_cast<long double>(a));
    CHECK(f_b(a) == doctest::Approx(static_cast<double>(1.0L - kEulerGamma + hl - a * j)).epsilon(1e-12));
    CHECK(f_b(a) > (1.0 - kEulerGamma) * a);
    CHECK(std::abs(f_a(a) - f_b(a) - f_g(a)) <= 1e-12);
  }
  // approach to 0
  CHECK(f_b(1e-6) < 1e-5);
  CHECK(f_a(1e-6) < 2e-5);
  CHECK_THROWS_AS(f_b(2.0), DomainError);
  CHECK_THROWS_AS(f_a(-1e-9), DomainError);
}

TEST_CASE("f_bc") {
  CHECK(f_bc(1.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(f_bc(1.0) == doctest::Approx(0.69314).epsilon(1e-5));
  CHECK(f_bc(0.5) == doctest::Approx(std::numbers::ln2 - 0.5).epsilon(1e-14));
  CHECK(f_bc(0.5) == doctest::Approx(0.19314).epsilon(1e-4));
  CHECK(f_bc(0.0) == 0.0);
  for (double a = 0.0013; a <= 1.0; a += 0.00317) {
    CHECK(f_bc(a) == doctest::Approx(static_cast<double>(f_bc_oracle(a))).epsilon(1e-12));
  }
  CHECK(f_bc(1e-5) < 2e-5);
  CHECK_THROWS_AS(f_bc(1.5), DomainError);
}

TEST_CASE("f_bc slopes between breakpoints") {
  for (int j = 1; j <= 40; ++j) {
    const double lo = 1.0 / (j + 1), hi = 1.0 / j;
    const double a = lo + 0.25 * (hi - lo), b = lo + 0.75 * (hi - lo);
    const double slope = (f_bc(b) - f_bc(a)) / (b - a);
    // floor(1/t) = j on the open interval; odd j carries slope 1.
    CHECK(slope == doctest::Approx(j % 2 == 1 ? 1.0 : 0.0).epsilon(1e-6));
  }
}

TEST_CASE("continuity at reciprocal breakpoints") {
  for (int j = 2; j <= 50; ++j) {
    const double r = 1.0 / j;
    for (auto f : {f_g, f_a, f_b, f_bc}) CHECK(std::abs(f(r + 1e-12) - f(r - 1e-12)) <= 1e-9);
  }
}

TEST_CASE("curve_sample and simplified main terms") {
  const auto s = curve_sample(0.25);
  CHECK(s.alpha == 0.25);
  CHECK(s.f_a == f_a(0.25));
  CHECK(s.f_b == f_b(0.25));
  CHECK(s.f_g == f_g(0.25));
  CHECK(s.f_bc == f_bc(0.25));

  const auto m = simplified_main_terms(100, 10);
  CHECK(m.a0 == 1000.0);
  CHECK(m.b0 == 500.0);
  CHECK_THROWS_AS(simplified_main_terms(100, 0.5), DomainError);
  CHECK_THROWS_AS(simplified_main_terms(100, 101), DomainError);

  // |f(x/n) n^2 - main| / x^2 stays bounded on alpha in [1e-3, 1/3], n = 1e4
  const double n = 1e4;
  double ca = 0, cb = 0;
  for (double a = 1e-3; a <= 1.0 / 3; a += 1e-3) {
    const double x = a * n;
    const auto t = simplified_main_terms(10'000, x);
    ca = std::max(ca, std::abs(f_a(a) * n * n - t.a0) / (x * x));
    cb = std::max(cb, std::abs(f_b(a) * n * n - t.b0) / (x * x));
  }
  MESSAGE("calibrated C for A0: " << ca << ", for B0: " << cb);
  CHECK(ca < 10.0);
  CHECK(cb < 10.0);
}
