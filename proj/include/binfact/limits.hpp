#pragma once

#include <cstdint>

namespace binfact {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// H_m = sum_{j=1}^m 1/j. Compensated direct sum for m <= kHarmonicDirectMax,
// ln m + gamma + 1/(2m) - 1/(12 m^2) above it.
inline constexpr std::uint64_t kHarmonicDirectMax = 1'000'000;
double harmonic(std::uint64_t m);

// floor(1/alpha) for alpha in (0, 1], decided by the sign of fma(j, alpha, -1)
// so representable alphas next to 1/j land on the correct side.
std::uint64_t floor_reciprocal(double alpha);

// Limit curves on [0, 1]; each is 0 at alpha = 0 and throws DomainError
// outside [0, 1].
//
// f_g(alpha) = 1/2 - j alpha + j(j+1)/2 alpha^2 on [1/(j+1), 1/j]
double f_g(double alpha);
// f_b(alpha) = 1 - gamma + (H_j - log(1/alpha)) - alpha j,   j = floor(1/alpha)
double f_b(double alpha);
// f_a(alpha) = 3/2 - gamma + (H_j - log(1/alpha)) + alpha^2 j^2 / 2 + alpha^2 j / 2 - 2 alpha j
double f_a(double alpha);
// Central binomial curve: f_bc(1) = log 2, slope 1 on [1/2k, 1/(2k-1)] and
// slope 0 on [1/(2k+1), 1/2k].
double f_bc(double alpha);

struct CurveSample {
  double alpha = 0.0;
  double f_a = 0.0;
  double f_b = 0.0;
  double f_g = 0.0;
  double f_bc = 0.0;
};

CurveSample curve_sample(double alpha);

// Comparators for the x = o(n) regime: A0 ~ n x, B0 ~ n x / 2.
struct SimplifiedMainTerms {
  double a0 = 0.0;
  double b0 = 0.0;
};

SimplifiedMainTerms simplified_main_terms(std::uint64_t n, double x);

}  // namespace binfact
