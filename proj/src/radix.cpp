#include "binfact/radix.hpp"

#include <algorithm>

#include "binfact/error.hpp"

namespace binfact {

namespace {

void check_base(std::uint64_t base) {
  if (base < 2) throw DomainError("radix: base must be >= 2, got " + std::to_string(base));
}

uint128 checked_add(uint128 a, uint128 b) {
  uint128 r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("running_digit_sum: exceeds 128-bit range");
  return r;
}

uint128 checked_mul(uint128 a, uint128 b) {
  uint128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("running_digit_sum: exceeds 128-bit range");
  return r;
}

[[maybe_unused]] bool trial_division_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d <= p / d; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

std::string to_string(uint128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::vector<std::uint64_t> digits(std::uint64_t base, std::uint64_t n) {
  check_base(base);
  std::vector<std::uint64_t> out;
  for (; n != 0; n /= base) out.push_back(n % base);
  return out;
}

std::uint64_t digit_sum(std::uint64_t base, std::uint64_t n) {
  check_base(base);
  std::uint64_t s = 0;
  for (; n != 0; n /= base) s += n % base;
  return s;
}

uint128 running_digit_sum(std::uint64_t base, std::uint64_t n) {
  check_base(base);
  const uint128 b = base;
  const uint128 nn = n;
  uint128 total = 0;
  for (uint128 m = 1; m <= nn; m = checked_mul(m, b)) {
    const uint128 mb = checked_mul(m, b);
    const uint128 cycles = nn / mb;
    const uint128 r = nn % mb;
    const uint128 t = r / m;
    // b, t < 2^64 so these products fit.
    const uint128 tri_b = b * (b - 1) / 2;
    const uint128 tri_t = t * (t - 1) / 2;
    total = checked_add(total, checked_mul(checked_mul(cycles, m), tri_b));
    total = checked_add(total, checked_mul(tri_t, m));
    total = checked_add(total, checked_mul(t, r - t * m));
    if (mb > nn) break;
  }
  return total;
}

std::uint64_t legendre_floor_sum(std::uint64_t p, std::uint64_t n) {
  check_base(p);
  std::uint64_t s = 0;
  for (std::uint64_t q = n / p; q != 0; q /= p) s += q;
  return s;
}

std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw DomainError("legendre_valuation: p must be prime, got " + std::to_string(p));
#ifndef NDEBUG
  if (!trial_division_prime(p)) throw DomainError("legendre_valuation: " + std::to_string(p) + " is not prime");
#endif
  const std::uint64_t d = digit_sum(p, n);
  const std::uint64_t v = (n - d) / (p - 1);
  if ((n - d) % (p - 1) != 0 || v != legendre_floor_sum(p, n)) {
    throw InvariantViolation("legendre_valuation: digit-sum and floor-sum formulas disagree for p=" +
                             std::to_string(p) + ", n=" + std::to_string(n));
  }
  return v;
}

RadixStat radix_stat(std::uint64_t base, std::uint64_t n) {
  return RadixStat{base, n, digit_sum(base, n), running_digit_sum(base, n)};
}

}  // namespace binfact
