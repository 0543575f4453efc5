#include "binfact/summation.hpp"

#include <algorithm>

#include <omp.h>

#include "binfact/error.hpp"

namespace binfact {

namespace {

CompensatedSum block_partial(std::span<const double> terms, std::size_t block) {
  const std::size_t begin = block * kReductionBlock;
  const std::size_t end = std::min(terms.size(), begin + kReductionBlock);
  CompensatedSum acc;
  for (std::size_t i = begin; i < end; ++i) acc.add(terms[i]);
  return acc;
}

std::vector<CompensatedSum> full_block_partials(std::span<const double> terms, std::size_t blocks,
                                                Execution exec) {
  std::vector<CompensatedSum> out(blocks);
  const auto nblocks = static_cast<std::ptrdiff_t>(blocks);
  if (exec == Execution::parallel && blocks > 1) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) out[b] = block_partial(terms, b);
  } else {
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) out[b] = block_partial(terms, b);
  }
  return out;
}

}  // namespace

double blocked_sum(std::span<const double> terms, Execution exec) {
  const std::size_t blocks = (terms.size() + kReductionBlock - 1) / kReductionBlock;
  const auto partials = full_block_partials(terms, blocks, exec);
  CompensatedSum acc;
  for (const auto& p : partials) acc.add(p);
  return acc.value();
}

PrefixSummer::PrefixSummer(std::span<const double> terms, Execution exec)
    : terms_(terms), blocks_(full_block_partials(terms, terms.size() / kReductionBlock, exec)) {}

double PrefixSummer::prefix(std::size_t count) const {
  if (count > terms_.size()) throw RangeError("PrefixSummer: prefix longer than the term list");
  const std::size_t full = count / kReductionBlock;
  CompensatedSum acc;
  for (std::size_t b = 0; b < full; ++b) acc.add(blocks_[b]);
  if (count % kReductionBlock != 0) acc.add(block_partial(terms_.first(count), full));
  return acc.value();
}

void set_thread_count(int threads) {
  if (threads > 0) {
    omp_set_num_threads(threads);
  } else {
    omp_set_num_threads(omp_get_num_procs());
  }
}

int thread_count() { return omp_get_max_threads(); }

ThreadScope::ThreadScope(int threads) : saved_(omp_get_max_threads()) { set_thread_count(threads); }

ThreadScope::~ThreadScope() { omp_set_num_threads(saved_); }

}  // namespace binfact
