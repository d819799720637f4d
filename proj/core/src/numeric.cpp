#include "evenparity/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace evenparity {

double log_factorial(int n)
{
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k)
{
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double log_sum_exp(std::span<const double> values)
{
    if (values.empty()) return -std::numeric_limits<double>::infinity();
    const double peak = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(peak)) return peak;
    double sum = 0.0;
    for (double v : values) sum += std::exp(v - peak);
    return peak + std::log(sum);
}

Complex i_pow(int k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

} // namespace evenparity
