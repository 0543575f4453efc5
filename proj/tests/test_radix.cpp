#include <doctest.h>

#include <cmath>
#include <vector>

#include "binfact/error.hpp"
#include "binfact/radix.hpp"

using namespace binfact;

namespace {

std::uint64_t brute_digit_sum(std::uint64_t b, std::uint64_t n) {
  std::uint64_t s = 0;
  for (; n; n /= b) s += n % b;
  return s;
}

bool is_small_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("digits") {
  CHECK(digits(7, 35) == std::vector<std::uint64_t>{0, 5});
  CHECK(digits(2, 0).empty());
  CHECK(digits(10, 1234) == std::vector<std::uint64_t>{4, 3, 2, 1});
  CHECK_THROWS_AS(digits(1, 5), DomainError);
  CHECK_THROWS_AS(digits(0, 5), DomainError);
  for (std::uint64_t b = 2; b <= 17; ++b) {
    for (std::uint64_t n = 0; n < 3000; n += 7) {
      const auto d = digits(b, n);
      std::uint64_t back = 0, place = 1;
      for (auto a : d) {
        CHECK(a < b);
        back += a * place;
        place *= b;
      }
      CHECK(back == n);
      if (n) CHECK(d.back() != 0);
    }
  }
}

TEST_CASE("digit_sum") {
  CHECK(digit_sum(7, 35) == 5);
  CHECK(digit_sum(9, 0) == 0);
  CHECK(digit_sum(3, 8) == 4);
  CHECK_THROWS_AS(digit_sum(1, 8), DomainError);
  // two-digit range sqrt(n) < b <= n
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    for (std::uint64_t b = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1; b <= n; ++b) {
      if (b * b <= n) continue;
      if (digit_sum(b, n) != n - (b - 1) * (n / b)) {
        FAIL("two-digit formula at b=" << b << " n=" << n);
      }
    }
  }
}

TEST_CASE("running_digit_sum small values") {
  CHECK(running_digit_sum(2, 4) == 4);
  CHECK(running_digit_sum(5, 0) == 0);
  CHECK(running_digit_sum(5, 1) == 0);
  std::uint64_t brute = 0;
  for (std::uint64_t j = 0; j < 10; ++j) brute += brute_digit_sum(3, j);
  // d_3(0..9) = 0 1 2 1 2 3 2 3 4 1
  CHECK(brute == 19);
  CHECK(running_digit_sum(3, 10) == 19);
  CHECK_THROWS_AS(running_digit_sum(1, 10), DomainError);
}

TEST_CASE("running_digit_sum matches brute force for b <= 50, n <= 1e4") {
  for (std::uint64_t b = 2; b <= 50; ++b) {
    std::uint64_t acc = 0;
    for (std::uint64_t n = 0; n <= 10'000; ++n) {
      if (running_digit_sum(b, n) != acc) FAIL("S_" << b << "(" << n << ")");
      acc += brute_digit_sum(b, n);
    }
  }
}

TEST_CASE("running_digit_sum large arguments") {
  // S_2(2^k) = k 2^{k-1}
  for (unsigned k = 1; k <= 63; ++k) {
    const std::uint64_t n = std::uint64_t{1} << k;
    CHECK(running_digit_sum(2, n) == static_cast<uint128>(k) * (n / 2));
  }
  // S_10(10^k) = 45 k 10^{k-1}
  std::uint64_t p = 1;
  for (unsigned k = 1; k <= 19; ++k) {
    p *= 10;
    CHECK(running_digit_sum(10, p) == static_cast<uint128>(45) * k * (p / 10));
  }
  CHECK_NOTHROW(running_digit_sum(2, ~std::uint64_t{0}));
  CHECK_NOTHROW(running_digit_sum(~std::uint64_t{0}, ~std::uint64_t{0}));
}

TEST_CASE("digit-sum inequality, equality exactly at powers") {
  for (std::uint64_t b = 2; b <= 10; ++b) {
    std::uint64_t next_power = 1;
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
      const uint128 s = running_digit_sum(b, n);
      const bool power = (n == next_power);
      if (power) {
        std::uint64_t k = 0;
        for (std::uint64_t m = n; m > 1; m /= b) ++k;
        CHECK(2 * s == static_cast<uint128>(b - 1) * n * k);
        next_power *= b;
      } else {
        const double rhs = 0.5 * static_cast<double>(b - 1) * static_cast<double>(n) * std::log(static_cast<double>(n)) /
                           std::log(static_cast<double>(b));
        if (!(static_cast<double>(s) < rhs)) FAIL("strict inequality at b=" << b << " n=" << n);
      }
    }
  }
}

TEST_CASE("running sum increments and digit-sum bound") {
  for (std::uint64_t b : {2ULL, 3ULL, 10ULL, 49ULL}) {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
      CHECK(running_digit_sum(b, n) - running_digit_sum(b, n - 1) == digit_sum(b, n - 1));
      const auto len = digits(b, n).size();
      CHECK(digit_sum(b, n) <= (b - 1) * len);
    }
  }
}

TEST_CASE("legendre") {
  CHECK(legendre_valuation(2, 4) == 3);
  CHECK(legendre_valuation(7, 35) == 5);
  CHECK(legendre_floor_sum(7, 35) == 5);
  CHECK(legendre_valuation(13, 0) == 0);
  for (std::uint64_t p = 2; p < 200; ++p) {
    if (!is_small_prime(p)) continue;
    for (std::uint64_t n = 0; n <= 3000; n += 13) {
      CHECK(legendre_valuation(p, n) == legendre_floor_sum(p, n));
      if (n >= p) CHECK(digit_sum(p, n) == n - (p - 1) * legendre_floor_sum(p, n));
    }
  }
#ifndef NDEBUG
  CHECK_THROWS(legendre_valuation(4, 10));
#endif
}

TEST_CASE("radix_stat and to_string") {
  const auto r = radix_stat(7, 35);
  CHECK(r.base == 7);
  CHECK(r.n == 35);
  CHECK(r.digit_sum == 5);
  CHECK(r.running_sum == running_digit_sum(7, 35));
  CHECK(to_string(0) == "0");
  CHECK(to_string(static_cast<uint128>(~std::uint64_t{0}) * 10 + 5) == "184467440737095516155");
}
