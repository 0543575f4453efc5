#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "binfact/execution.hpp"

namespace binfact {

// Neumaier's variant of Kahan summation. The running compensation also
// captures the low bits lost when a term is larger than the current sum.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (abs(sum_) >= abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  void add(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }

  CompensatedSum& operator+=(double term) noexcept {
    add(term);
    return *this;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  static double abs(double v) noexcept { return v < 0 ? -v : v; }

  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Terms are reduced in fixed, index-aligned blocks of this size; block
// partials are then folded left to right. The topology depends only on the
// number of terms, never on the thread count.
inline constexpr std::size_t kReductionBlock = 2048;

double blocked_sum(std::span<const double> terms, Execution exec = Execution::parallel);

// Sums of every prefix terms[0, count), each bitwise equal to
// blocked_sum(terms.first(count)). Full-block partials are computed once.
class PrefixSummer {
 public:
  explicit PrefixSummer(std::span<const double> terms, Execution exec = Execution::parallel);
  double prefix(std::size_t count) const;
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  std::span<const double> terms_;
  std::vector<CompensatedSum> blocks_;
};

}  // namespace binfact
