#pragma once

#include <cstdint>

#include "binfact/primes.hpp"

// Serial single-accumulator versions of the partial-sum kernels. Kept for
// tests and the benchmark; they agree with the blocked kernels to rounding,
// not bitwise.
namespace binfact::reference {

double a_of(const PrimeTable& table, std::uint64_t n, double x);
double b_of(const PrimeTable& table, std::uint64_t n, double x);
double log_g(const PrimeTable& table, std::uint64_t n, double x);
double bc_log_g(const PrimeTable& table, std::uint64_t n, double x);

}  // namespace binfact::reference
