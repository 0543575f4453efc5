#pragma once

#include <cstdint>
#include <vector>

#include "binfact/execution.hpp"
#include "binfact/primes.hpp"
#include "binfact/summation.hpp"

namespace binfact {

// Per-prime contributions to A(n,.), B(n,.), log G(n,.) for the first
// `count` primes of a table. Entry i belongs to primes()[i].
struct BinomialProductTerms {
  std::uint64_t n = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> g;
};

BinomialProductTerms binomial_product_terms(const PrimeTable& table, std::uint64_t n, std::size_t count,
                                            Execution exec = Execution::parallel);

// Per-prime nu_p(C(2n,n)) ln p for the first `count` primes.
std::vector<double> central_binomial_terms(const PrimeTable& table, std::uint64_t n, std::size_t count,
                                           Execution exec = Execution::parallel);

// Prefix-sum view over BinomialProductTerms: A, B, log G at any x <= n in
// O(x / kReductionBlock) after one pass over the terms.
class PartialSumIndex {
 public:
  PartialSumIndex(const PrimeTable& table, std::uint64_t n, Execution exec = Execution::parallel);
  PartialSumIndex(const PartialSumIndex&) = delete;
  PartialSumIndex& operator=(const PartialSumIndex&) = delete;
  PartialSumIndex(PartialSumIndex&&) noexcept = default;

  std::uint64_t n() const noexcept { return terms_.n; }
  // Values at x, clamped to n.
  double a(double x) const;
  double b(double x) const;
  double log_g(double x) const;

 private:
  std::size_t count(double x) const;

  const PrimeTable* table_;
  BinomialProductTerms terms_;
  PrefixSummer a_sum_;
  PrefixSummer b_sum_;
  PrefixSummer g_sum_;
};

}  // namespace binfact
