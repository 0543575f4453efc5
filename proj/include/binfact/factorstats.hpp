#pragma once

#include <cstdint>

#include "binfact/execution.hpp"
#include "binfact/primes.hpp"
#include "binfact/radix.hpp"

namespace binfact {

// Exponent of p in Gbar_n = prod_{k=0}^n C(n,k), with the digit statistics it
// is built from: nu = (2 s - (n-1) d) / (p-1).
struct ValuationRecord {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  uint128 nu = 0;
  std::uint64_t d = 0;
  uint128 s = 0;
};

// Exact digit-sum formula. Requires 2 <= p <= n; p is trusted to be prime.
// Throws InvariantViolation if the numerator is negative or not divisible.
ValuationRecord valuation_record(std::uint64_t p, std::uint64_t n);

// As valuation_record, with p checked against the table.
ValuationRecord nu_p(const PrimeTable& table, std::uint64_t p, std::uint64_t n);

// Ground truth from Gbar_n = (n!)^{n+1} / prod_k (k!)^2 via Legendre
// valuations. O(n log n); refuses n > kOracleMaxN. Returns 0 for p > n.
inline constexpr std::uint64_t kOracleMaxN = 5000;
std::uint64_t nu_p_oracle(std::uint64_t p, std::uint64_t n);

// A(n,x) = sum_{p<=x} 2 S_p(n) / (p-1) ln p.
// x >= n is clamped to n: the sums are frozen there.
double a_of(const PrimeTable& table, std::uint64_t n, double x, Execution exec = Execution::parallel);

// B(n,x) = sum_{p<=x} (n-1) d_p(n) / (p-1) ln p.
double b_of(const PrimeTable& table, std::uint64_t n, double x, Execution exec = Execution::parallel);

// log G(n,x) = sum_{p<=x} nu_p(Gbar_n) ln p, from the exact integer exponents.
double log_g(const PrimeTable& table, std::uint64_t n, double x, Execution exec = Execution::parallel);

// All three at once; `clamped` reports x > n.
struct PartialSums {
  double a = 0.0;
  double b = 0.0;
  double log_g = 0.0;
  bool clamped = false;
};
PartialSums partial_sums(const PrimeTable& table, std::uint64_t n, double x, Execution exec = Execution::parallel);

// B(n) = B11 - B12 + B_R, splitting primes at sqrt(n).
//   B11 = n(n-1) sum_{sqrt n < p <= n} ln p / (p-1)
//   B12 = (n-1) sum_{j=1}^{floor sqrt n} j * sum'_{n/(j+1) < p <= n/j} ln p   (p > sqrt n only)
//   B_R = sum_{p <= sqrt n} (n-1) d_p(n) / (p-1) ln p
struct BDecomposition {
  double b11 = 0.0;
  double b12 = 0.0;
  double b_r = 0.0;
  double total() const noexcept { return b11 - b12 + b_r; }
};
BDecomposition b_decomposition(const PrimeTable& table, std::uint64_t n);

// Index range for y in A(n,x) = A(x,x) + sum_y 2/(y-1) B(y,x).
enum class RecursionRange {
  exact,         // y = x .. n-1, the range that telescopes S_p(n) - S_p(x)
  as_printed,    // y = x+1 .. n-1
  through_n,     // y = x+1 .. n
};

// Right-hand side of the A-recursion. x must be an integer in [2, n).
double a_recursion_check(const PrimeTable& table, std::uint64_t n, double x,
                         RecursionRange range = RecursionRange::exact);

// nu_p(C(2n, n)) as the number of carries when adding n + n in base p.
// Requires p <= 2n.
std::uint64_t bc_valuation(std::uint64_t p, std::uint64_t n);

// Window form for sqrt(2n) < p <= 2n: 1 on (2n/2k, 2n/(2k-1)], 0 on
// (2n/(2k+1), 2n/2k], decided with integer comparisons.
std::uint64_t bc_interval_indicator(std::uint64_t p, std::uint64_t n);

// log G_BC(2n, x) = sum_{p<=x} nu_p(C(2n,n)) ln p; x >= 2n is clamped.
double bc_log_g(const PrimeTable& table, std::uint64_t n, double x, Execution exec = Execution::parallel);

}  // namespace binfact
