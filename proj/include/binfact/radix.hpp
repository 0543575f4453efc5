#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace binfact {

__extension__ typedef unsigned __int128 uint128;

std::string to_string(uint128 v);

// Base-b digits of n, least significant first. Empty for n = 0.
std::vector<std::uint64_t> digits(std::uint64_t base, std::uint64_t n);

// d_b(n), the sum of the base-b digits of n.
std::uint64_t digit_sum(std::uint64_t base, std::uint64_t n);

// S_b(n) = sum_{j=0}^{n-1} d_b(j), by place-value column sums in O(log_b n).
uint128 running_digit_sum(std::uint64_t base, std::uint64_t n);

// nu_p(n!) = sum_{k>=1} floor(n / p^k).
std::uint64_t legendre_floor_sum(std::uint64_t p, std::uint64_t n);

// nu_p(n!) via (n - d_p(n)) / (p - 1), cross-checked against
// legendre_floor_sum. Primality of p is trusted in release builds.
std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n);

struct RadixStat {
  std::uint64_t base = 0;
  std::uint64_t n = 0;
  std::uint64_t digit_sum = 0;
  uint128 running_sum = 0;
};

RadixStat radix_stat(std::uint64_t base, std::uint64_t n);

}  // namespace binfact
