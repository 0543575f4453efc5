#include "binfact/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binfact/error.hpp"
#include "binfact/factorstats.hpp"

namespace binfact {

namespace {

// num / den as a double, splitting off the integer part first so large
// numerators keep their fractional bits.
double ratio(uint128 num, std::uint64_t den) {
  const uint128 q = num / den;
  const uint128 r = num % den;
  return static_cast<double>(q) + static_cast<double>(r) / static_cast<double>(den);
}

template <typename Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn) {
  const auto n = static_cast<std::ptrdiff_t>(count);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
  }
}

}  // namespace

BinomialProductTerms binomial_product_terms(const PrimeTable& table, std::uint64_t n, std::size_t count,
                                            Execution exec) {
  if (count > table.size()) throw RangeError("binomial_product_terms: count exceeds table size");
  BinomialProductTerms out;
  out.n = n;
  out.a.resize(count);
  out.b.resize(count);
  out.g.resize(count);
  const auto primes = table.primes();
  const auto logs = table.logs();
  for_each_index(count, exec, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    const auto rec = valuation_record(p, n);
    const double lp = logs[i];
    out.a[i] = ratio(2 * rec.s, p - 1) * lp;
    out.b[i] = ratio(static_cast<uint128>(n - 1) * rec.d, p - 1) * lp;
    out.g[i] = static_cast<double>(rec.nu) * lp;
  });
  return out;
}

std::vector<double> central_binomial_terms(const PrimeTable& table, std::uint64_t n, std::size_t count,
                                           Execution exec) {
  if (count > table.size()) throw RangeError("central_binomial_terms: count exceeds table size");
  std::vector<double> out(count);
  const auto primes = table.primes();
  const auto logs = table.logs();
  for_each_index(count, exec, [&](std::size_t i) {
    out[i] = static_cast<double>(bc_valuation(primes[i], n)) * logs[i];
  });
  return out;
}

PartialSumIndex::PartialSumIndex(const PrimeTable& table, std::uint64_t n, Execution exec)
    : table_(&table),
      terms_([&] {
        if (n < 1) throw DomainError("PartialSumIndex: n must be >= 1");
        if (n > table.limit()) {
          throw RangeError("PartialSumIndex: n = " + std::to_string(n) + " exceeds sieve limit " +
                           std::to_string(table.limit()));
        }
        return binomial_product_terms(table, n, table.count_upto(n), exec);
      }()),
      a_sum_(terms_.a, exec),
      b_sum_(terms_.b, exec),
      g_sum_(terms_.g, exec) {}

std::size_t PartialSumIndex::count(double x) const {
  if (std::isnan(x) || x < 0.0) throw DomainError("partial sums: x must be >= 0");
  return table_->count_upto(std::min(x, static_cast<double>(terms_.n)));
}

double PartialSumIndex::a(double x) const { return a_sum_.prefix(count(x)); }
double PartialSumIndex::b(double x) const { return b_sum_.prefix(count(x)); }
double PartialSumIndex::log_g(double x) const { return g_sum_.prefix(count(x)); }

}  // namespace binfact
