#pragma once

#include <complex>
#include <span>

namespace evenparity {

using Complex = std::complex<double>;

/// Captured-norm threshold below which truncation warnings are emitted.
inline constexpr double kTruncationTolerance = 1e-6;

/// Default photon-number truncation.
inline constexpr int kDefaultTrunc = 100;

/// ln(n!) via lgamma.
double log_factorial(int n);

/// ln C(n, k); -inf when k is outside [0, n].
double log_binomial(int n, int k);

/// ln(sum exp(v)) without overflow; -inf for an empty span.
double log_sum_exp(std::span<const double> values);

/// i^k for any integer k, exact.
Complex i_pow(int k);

/// (-1)^k
inline double sign_pow(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

} // namespace evenparity
