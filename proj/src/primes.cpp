#include "binfact/primes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "binfact/error.hpp"
#include "binfact/summation.hpp"

namespace binfact {

namespace {

// Odd-only segment: byte i stands for low + 2i. 32 KiB fits L1.
constexpr std::uint64_t kSegmentBytes = 32 * 1024;
constexpr std::uint64_t kSegmentSpan = 2 * kSegmentBytes;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

// Odd primes in [low, high), low odd.
void sieve_segment(std::uint64_t low, std::uint64_t high, std::span<const std::uint64_t> base,
                   std::vector<std::uint64_t>& out) {
  std::vector<char> composite((high - low + 1) / 2, 0);
  for (std::uint64_t p : base) {
    if (p == 2) continue;
    if (p * p >= high) break;
    std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
    if (start % 2 == 0) start += p;
    for (std::uint64_t j = start; j < high; j += 2 * p) composite[(j - low) / 2] = 1;
  }
  for (std::size_t i = 0; i < composite.size(); ++i) {
    const std::uint64_t v = low + 2 * i;
    if (!composite[i] && v > 1) out.push_back(v);
  }
}

std::uint64_t floor_to_u64(double x) {
  if (!(x >= 0.0)) return 0;
  if (x >= 18446744073709551615.0) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::floor(x));
}

void check_query(const PrimeTable& table, double x, const char* what) {
  if (std::isnan(x) || x < 0.0) throw DomainError(std::string(what) + ": x must be >= 0");
  if (x > static_cast<double>(table.limit())) {
    throw RangeError(std::string(what) + ": x = " + std::to_string(x) + " exceeds sieve limit " +
                     std::to_string(table.limit()));
  }
}

}  // namespace

std::size_t PrimeTable::count_upto(std::uint64_t x) const noexcept {
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::size_t PrimeTable::count_upto(double x) const noexcept { return count_upto(floor_to_u64(x)); }

bool PrimeTable::is_prime(std::uint64_t v) const {
  if (v > limit_) throw RangeError("is_prime: value exceeds sieve limit");
  return std::binary_search(primes_.begin(), primes_.end(), v);
}

PrimeTable sieve(std::uint64_t limit, Execution exec) {
  if (limit < 2) throw DomainError("sieve: limit < 2 gives an empty prime table");
  if (limit > kMaxSieveLimit) throw CapacityError("sieve: limit exceeds 2^40");

  const auto base = small_primes(isqrt(limit));
  // Segments cover the odd numbers in [1, limit].
  const std::uint64_t end = limit + 1;
  const std::uint64_t segments = (end - 1 + kSegmentSpan - 1) / kSegmentSpan;
  std::vector<std::vector<std::uint64_t>> parts(segments);
  const auto nseg = static_cast<std::int64_t>(segments);
  auto run = [&](std::int64_t s) {
    const std::uint64_t low = 1 + static_cast<std::uint64_t>(s) * kSegmentSpan;
    const std::uint64_t high = std::min(end, low + kSegmentSpan);
    sieve_segment(low, high, base, parts[s]);
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t s = 0; s < nseg; ++s) run(s);
  } else {
    for (std::int64_t s = 0; s < nseg; ++s) run(s);
  }

  std::vector<std::uint64_t> primes{2};
  std::size_t total = 1;
  for (const auto& part : parts) total += part.size();
  primes.reserve(total);
  for (const auto& part : parts) primes.insert(primes.end(), part.begin(), part.end());
  return make_prime_table(limit, std::move(primes));
}

PrimeTable make_prime_table(std::uint64_t limit, std::vector<std::uint64_t> primes) {
  PrimeTable t;
  t.limit_ = limit;
  t.primes_ = std::move(primes);
  t.logs_.resize(t.primes_.size());
  for (std::size_t i = 0; i < t.primes_.size(); ++i) t.logs_[i] = std::log(static_cast<double>(t.primes_[i]));
  return t;
}

std::uint64_t prime_pi(const PrimeTable& table, double x) {
  check_query(table, x, "pi");
  return table.count_upto(x);
}

double theta(const PrimeTable& table, double x) {
  check_query(table, x, "theta");
  return blocked_sum(table.logs().first(table.count_upto(x)));
}

double psi(const PrimeTable& table, double x) {
  check_query(table, x, "psi");
  const std::uint64_t xi = floor_to_u64(x);
  const std::size_t count = table.count_upto(xi);
  std::vector<double> terms(count);
  const auto primes = table.primes();
  const auto logs = table.logs();
  for (std::size_t i = 0; i < count; ++i) {
    // Number of powers p^k <= x.
    std::uint64_t k = 0;
    for (std::uint64_t q = 1; q <= xi / primes[i]; q *= primes[i]) ++k;
    terms[i] = static_cast<double>(k) * logs[i];
  }
  return blocked_sum(terms);
}

double mertens_h(const PrimeTable& table, double x) {
  check_query(table, x, "mertens_h");
  if (x < 2.0) throw DomainError("mertens_h: x must be >= 2");
  const std::size_t count = table.count_upto(x);
  std::vector<double> terms(count);
  const auto primes = table.primes();
  const auto logs = table.logs();
  for (std::size_t i = 0; i < count; ++i) terms[i] = logs[i] / static_cast<double>(primes[i]);
  return blocked_sum(terms);
}

}  // namespace binfact
