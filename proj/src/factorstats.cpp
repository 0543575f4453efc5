#include "binfact/factorstats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binfact/error.hpp"
#include "binfact/kernels.hpp"
#include "binfact/summation.hpp"

namespace binfact {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_n(const PrimeTable& table, std::uint64_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be >= 1");
  if (n > table.limit()) {
    throw RangeError(std::string(what) + ": n = " + num(n) + " exceeds sieve limit " + num(table.limit()));
  }
}

void check_x(double x, const char* what) {
  if (std::isnan(x) || x < 0.0) throw DomainError(std::string(what) + ": x must be >= 0");
}

std::size_t clamped_count(const PrimeTable& table, std::uint64_t n, double x) {
  return table.count_upto(std::min(x, static_cast<double>(n)));
}

}  // namespace

ValuationRecord valuation_record(std::uint64_t p, std::uint64_t n) {
  if (p < 2 || p > n) throw DomainError("nu_p: need 2 <= p <= n, got p=" + num(p) + ", n=" + num(n));
  ValuationRecord rec;
  rec.p = p;
  rec.n = n;
  rec.d = digit_sum(p, n);
  rec.s = running_digit_sum(p, n);
  const uint128 plus = 2 * rec.s;
  const uint128 minus = static_cast<uint128>(n - 1) * rec.d;
  if (plus < minus || (plus - minus) % (p - 1) != 0) {
    throw InvariantViolation("nu_p: 2S - (n-1)d not a nonnegative multiple of p-1 at p=" + num(p) +
                             ", n=" + num(n));
  }
  rec.nu = (plus - minus) / (p - 1);
  return rec;
}

ValuationRecord nu_p(const PrimeTable& table, std::uint64_t p, std::uint64_t n) {
  check_n(table, n, "nu_p");
  if (p > n) throw DomainError("nu_p: p = " + num(p) + " > n = " + num(n));
  if (!table.is_prime(p)) throw DomainError("nu_p: " + num(p) + " is not prime");
  return valuation_record(p, n);
}

std::uint64_t nu_p_oracle(std::uint64_t p, std::uint64_t n) {
  if (n < 1) throw DomainError("nu_p_oracle: n must be >= 1");
  if (n > kOracleMaxN) throw DomainError("nu_p_oracle: n = " + num(n) + " beyond oracle scale " + num(kOracleMaxN));
  if (p > n) return 0;
  std::uint64_t denominator = 0;
  for (std::uint64_t k = 0; k <= n; ++k) denominator += legendre_valuation(p, k);
  const std::uint64_t numerator = (n + 1) * legendre_valuation(p, n);
  return numerator - 2 * denominator;
}

double a_of(const PrimeTable& table, std::uint64_t n, double x, Execution exec) {
  return partial_sums(table, n, x, exec).a;
}

double b_of(const PrimeTable& table, std::uint64_t n, double x, Execution exec) {
  return partial_sums(table, n, x, exec).b;
}

double log_g(const PrimeTable& table, std::uint64_t n, double x, Execution exec) {
  return partial_sums(table, n, x, exec).log_g;
}

PartialSums partial_sums(const PrimeTable& table, std::uint64_t n, double x, Execution exec) {
  check_n(table, n, "partial_sums");
  check_x(x, "partial_sums");
  const auto terms = binomial_product_terms(table, n, clamped_count(table, n, x), exec);
  PartialSums out;
  out.a = blocked_sum(terms.a, exec);
  out.b = blocked_sum(terms.b, exec);
  out.log_g = blocked_sum(terms.g, exec);
  out.clamped = x > static_cast<double>(n);
  return out;
}

BDecomposition b_decomposition(const PrimeTable& table, std::uint64_t n) {
  if (n < 4) throw DomainError("b_decomposition: n must be >= 4");
  check_n(table, n, "b_decomposition");
  const std::uint64_t root = isqrt(n);
  const auto primes = table.primes();
  const auto logs = table.logs();
  const std::size_t small = table.count_upto(root);  // p <= sqrt(n)
  const std::size_t all = table.count_upto(n);

  CompensatedSum b_r;
  for (std::size_t i = 0; i < small; ++i) {
    const std::uint64_t p = primes[i];
    const uint128 numer = static_cast<uint128>(n - 1) * digit_sum(p, n);
    const double weight = static_cast<double>(numer / (p - 1)) +
                          static_cast<double>(numer % (p - 1)) / static_cast<double>(p - 1);
    b_r.add(weight * logs[i]);
  }

  CompensatedSum b11;
  for (std::size_t i = small; i < all; ++i) b11.add(logs[i] / static_cast<double>(primes[i] - 1));

  CompensatedSum outer;
  for (std::uint64_t j = 1; j <= root; ++j) {
    const std::uint64_t lo = n / (j + 1);
    const std::uint64_t hi = n / j;
    // Primes in (lo, hi], restricted to p > sqrt(n).
    const std::size_t begin = std::max(table.count_upto(lo), small);
    const std::size_t end = table.count_upto(hi);
    CompensatedSum inner;
    for (std::size_t i = begin; i < end; ++i) inner.add(logs[i]);
    outer.add(static_cast<double>(j) * inner.value());
  }

  BDecomposition out;
  out.b11 = static_cast<double>(n) * static_cast<double>(n - 1) * b11.value();
  out.b12 = static_cast<double>(n - 1) * outer.value();
  out.b_r = b_r.value();
  return out;
}

double a_recursion_check(const PrimeTable& table, std::uint64_t n, double x, RecursionRange range) {
  check_n(table, n, "a_recursion_check");
  if (std::isnan(x) || x != std::floor(x)) throw DomainError("a_recursion_check: x must be an integer");
  if (x < 2.0 || x >= static_cast<double>(n)) throw DomainError("a_recursion_check: need 2 <= x < n");
  const auto xi = static_cast<std::uint64_t>(x);

  std::uint64_t first = xi + 1;
  std::uint64_t last = n - 1;
  switch (range) {
    case RecursionRange::exact:
      first = xi;
      break;
    case RecursionRange::as_printed:
      break;
    case RecursionRange::through_n:
      last = n;
      break;
  }
  CompensatedSum acc;
  acc.add(a_of(table, xi, x));
  for (std::uint64_t y = first; y <= last; ++y) {
    acc.add(2.0 / static_cast<double>(y - 1) * b_of(table, y, x));
  }
  return acc.value();
}

std::uint64_t bc_valuation(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw DomainError("bc_valuation: p must be prime");
  if (n < 1 || p > 2 * n) throw DomainError("bc_valuation: need p <= 2n, got p=" + num(p) + ", n=" + num(n));
  std::uint64_t carries = 0;
  std::uint64_t carry = 0;
  for (std::uint64_t a = n; a != 0 || carry != 0; a /= p) {
    const std::uint64_t column = 2 * (a % p) + carry;
    carry = column >= p ? 1 : 0;
    carries += carry;
  }
  return carries;
}

std::uint64_t bc_interval_indicator(std::uint64_t p, std::uint64_t n) {
  const uint128 m = static_cast<uint128>(2) * n;
  const uint128 pp = p;
  if (pp * pp <= m || pp > m) throw DomainError("bc_interval_indicator: need sqrt(2n) < p <= 2n");
  for (uint128 k = 1; (2 * k - 1) * pp <= m; ++k) {
    if (2 * k * pp > m) return 1;        // 2n/2k < p <= 2n/(2k-1)
    if ((2 * k + 1) * pp > m) return 0;  // 2n/(2k+1) < p <= 2n/2k
  }
  throw InvariantViolation("bc_interval_indicator: p fell in no window");
}

double bc_log_g(const PrimeTable& table, std::uint64_t n, double x, Execution exec) {
  if (n < 1) throw DomainError("bc_log_g: n must be >= 1");
  if (2 * n > table.limit()) {
    throw RangeError("bc_log_g: 2n = " + num(2 * n) + " exceeds sieve limit " + num(table.limit()));
  }
  check_x(x, "bc_log_g");
  const std::size_t count = table.count_upto(std::min(x, static_cast<double>(2 * n)));
  return blocked_sum(central_binomial_terms(table, n, count, exec), exec);
}

}  // namespace binfact
