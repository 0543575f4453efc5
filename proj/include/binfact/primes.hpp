#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "binfact/execution.hpp"

namespace binfact {

// Largest sieve limit accepted. Bounded by memory for the stored table.
inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 40;

// Immutable list of all primes <= limit with their natural logs.
// Safe to share across threads.
class PrimeTable {
 public:
  PrimeTable() = default;

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }
  std::span<const double> logs() const noexcept { return logs_; }
  std::size_t size() const noexcept { return primes_.size(); }

  // Number of stored primes <= x, i.e. the index one past the last p <= x.
  // x may exceed limit here; callers that need range checking do it first.
  std::size_t count_upto(double x) const noexcept;
  std::size_t count_upto(std::uint64_t x) const noexcept;

  bool is_prime(std::uint64_t v) const;

 private:
  friend PrimeTable sieve(std::uint64_t limit, Execution exec);
  friend PrimeTable make_prime_table(std::uint64_t limit, std::vector<std::uint64_t> primes);

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
  std::vector<double> logs_;
};

// Segmented sieve of Eratosthenes. Deterministic for any thread count.
PrimeTable sieve(std::uint64_t limit, Execution exec = Execution::parallel);

// Builds a table from an externally produced prime list (cache loading).
// The list is trusted to be the ascending primes <= limit.
PrimeTable make_prime_table(std::uint64_t limit, std::vector<std::uint64_t> primes);

// Prime-counting function pi(x).
std::uint64_t prime_pi(const PrimeTable& table, double x);

// Chebyshev theta(x) = sum_{p <= x} ln p.
double theta(const PrimeTable& table, double x);

// Chebyshev psi(x) = sum_{p^k <= x} ln p.
double psi(const PrimeTable& table, double x);

// sum_{p <= x} (ln p) / p. Requires x >= 2.
double mertens_h(const PrimeTable& table, double x);

// Binary cache. Layout (little endian):
//   "BFPT" | version u32 | limit u64 | count u64 | LEB128 prime gaps | FNV-1a-64 of gap bytes
void save_prime_cache(const PrimeTable& table, const std::filesystem::path& path);

// Throws IoError on a malformed file or when the stored limit differs from
// `expected_limit`.
PrimeTable load_prime_cache(const std::filesystem::path& path, std::uint64_t expected_limit);

// Loads from `path` if it holds a valid cache for `limit`, otherwise sieves
// and writes the cache. An empty path just sieves.
PrimeTable sieve_cached(std::uint64_t limit, const std::filesystem::path& path,
                        Execution exec = Execution::parallel);

}  // namespace binfact
