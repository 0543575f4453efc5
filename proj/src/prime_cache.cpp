#include <array>
#include <cstring>
#include <fstream>
#include <iterator>

#include "binfact/error.hpp"
#include "binfact/primes.hpp"

namespace binfact {

namespace {

constexpr std::array<char, 4> kMagic{'B', 'F', 'P', 'T'};
constexpr std::uint32_t kVersion = 1;

std::uint64_t fnv1a(const std::vector<unsigned char>& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <typename T>
void put_le(std::vector<unsigned char>& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

template <typename T>
T get_le(const std::vector<unsigned char>& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw IoError("prime cache: truncated header");
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(in[pos + i]) << (8 * i);
  pos += sizeof(T);
  return v;
}

}  // namespace

void save_prime_cache(const PrimeTable& table, const std::filesystem::path& path) {
  std::vector<unsigned char> gaps;
  gaps.reserve(table.size() + 16);
  std::uint64_t prev = 0;
  for (std::uint64_t p : table.primes()) {
    std::uint64_t gap = p - prev;
    prev = p;
    do {
      unsigned char byte = gap & 0x7f;
      gap >>= 7;
      if (gap != 0) byte |= 0x80;
      gaps.push_back(byte);
    } while (gap != 0);
  }

  std::vector<unsigned char> out(kMagic.begin(), kMagic.end());
  put_le<std::uint32_t>(out, kVersion);
  put_le<std::uint64_t>(out, table.limit());
  put_le<std::uint64_t>(out, table.size());
  out.insert(out.end(), gaps.begin(), gaps.end());
  put_le<std::uint64_t>(out, fnv1a(gaps));

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("prime cache: cannot open " + path.string() + " for writing");
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("prime cache: write failed for " + path.string());
}

PrimeTable load_prime_cache(const std::filesystem::path& path, std::uint64_t expected_limit) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("prime cache: cannot open " + path.string());
  std::vector<unsigned char> in((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  const std::string where = " (" + path.string() + ")";

  if (in.size() < kMagic.size() || std::memcmp(in.data(), kMagic.data(), kMagic.size()) != 0) {
    throw IoError("prime cache: bad magic" + where);
  }
  std::size_t pos = kMagic.size();
  if (get_le<std::uint32_t>(in, pos) != kVersion) throw IoError("prime cache: unsupported version" + where);
  const auto limit = get_le<std::uint64_t>(in, pos);
  if (limit != expected_limit) {
    throw IoError("prime cache: stored limit " + std::to_string(limit) + " != requested " +
                  std::to_string(expected_limit) + where);
  }
  const auto count = get_le<std::uint64_t>(in, pos);
  if (in.size() < pos + 8) throw IoError("prime cache: truncated" + where);
  const std::size_t gaps_end = in.size() - 8;
  std::size_t tail = gaps_end;
  const auto checksum = get_le<std::uint64_t>(in, tail);
  const std::vector<unsigned char> gaps(in.begin() + static_cast<std::ptrdiff_t>(pos),
                                        in.begin() + static_cast<std::ptrdiff_t>(gaps_end));
  if (fnv1a(gaps) != checksum) throw IoError("prime cache: checksum mismatch" + where);

  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  std::uint64_t prev = 0;
  std::size_t i = 0;
  while (i < gaps.size()) {
    std::uint64_t gap = 0;
    int shift = 0;
    while (true) {
      if (i >= gaps.size() || shift > 63) throw IoError("prime cache: bad gap encoding" + where);
      const unsigned char b = gaps[i++];
      gap |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      shift += 7;
      if ((b & 0x80) == 0) break;
    }
    if (gap == 0) throw IoError("prime cache: zero gap" + where);
    prev += gap;
    primes.push_back(prev);
  }
  if (primes.size() != count) throw IoError("prime cache: prime count mismatch" + where);
  if (!primes.empty() && primes.back() > limit) throw IoError("prime cache: prime beyond limit" + where);
  return make_prime_table(limit, std::move(primes));
}

PrimeTable sieve_cached(std::uint64_t limit, const std::filesystem::path& path, Execution exec) {
  if (path.empty()) return sieve(limit, exec);
  if (std::filesystem::exists(path)) {
    try {
      return load_prime_cache(path, limit);
    } catch (const IoError&) {
      // stale or foreign cache: rebuild below
    }
  }
  auto table = sieve(limit, exec);
  save_prime_cache(table, path);
  return table;
}

}  // namespace binfact
