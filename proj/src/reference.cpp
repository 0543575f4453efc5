#include "binfact/reference.hpp"

#include <algorithm>

#include "binfact/factorstats.hpp"
#include "binfact/radix.hpp"
#include "binfact/summation.hpp"

namespace binfact::reference {

namespace {

template <typename Term>
double sum_over_primes(const PrimeTable& table, double upto, Term&& term) {
  CompensatedSum acc;
  const std::size_t count = table.count_upto(upto);
  for (std::size_t i = 0; i < count; ++i) acc.add(term(table.primes()[i]) * table.logs()[i]);
  return acc.value();
}

double x_clamped(std::uint64_t n, double x) { return std::min(x, static_cast<double>(n)); }

}  // namespace

double a_of(const PrimeTable& table, std::uint64_t n, double x) {
  return sum_over_primes(table, x_clamped(n, x), [n](std::uint64_t p) {
    return 2.0 * static_cast<double>(running_digit_sum(p, n)) / static_cast<double>(p - 1);
  });
}

double b_of(const PrimeTable& table, std::uint64_t n, double x) {
  return sum_over_primes(table, x_clamped(n, x), [n](std::uint64_t p) {
    return static_cast<double>(n - 1) / static_cast<double>(p - 1) * static_cast<double>(digit_sum(p, n));
  });
}

double log_g(const PrimeTable& table, std::uint64_t n, double x) {
  return sum_over_primes(table, x_clamped(n, x), [n](std::uint64_t p) {
    __extension__ typedef __int128 int128;
    const int128 numer = 2 * static_cast<int128>(running_digit_sum(p, n)) -
                         static_cast<int128>(n - 1) * static_cast<int128>(digit_sum(p, n));
    return static_cast<double>(numer / static_cast<int128>(p - 1));
  });
}

double bc_log_g(const PrimeTable& table, std::uint64_t n, double x) {
  return sum_over_primes(table, x_clamped(2 * n, x),
                         [n](std::uint64_t p) { return static_cast<double>(bc_valuation(p, n)); });
}

}  // namespace binfact::reference
