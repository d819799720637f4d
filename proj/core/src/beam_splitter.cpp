#include "evenparity/beam_splitter.hpp"

#include <cmath>
#include <numbers>

namespace evenparity {

Eigen::Matrix2cd BeamSplitterConvention::mode_matrix() const
{
    const double s = 1.0 / std::numbers::sqrt2;
    Eigen::Matrix2cd m;
    m << Complex{s, 0.0}, Complex{0.0, s},
         Complex{0.0, s}, Complex{s, 0.0};
    m.row(0) *= std::polar(1.0, output_phase_1);
    m.row(1) *= std::polar(1.0, output_phase_2);
    return m;
}

Complex hb_coefficient(int j, int n)
{
    if (n < 0 || j < 0 || j > 2 * n) throw DomainError("hb_coefficient: requires 0 <= j <= 2n");
    if (j % 2 != 0) return {0.0, 0.0};
    const int half = j / 2;
    const double log_mag = -n * std::numbers::ln2
                           + 0.5 * (log_factorial(2 * n - j) + log_factorial(j))
                           - log_factorial(half) - log_factorial(n - half);
    return std::exp(log_mag) * i_pow(n);
}

Complex hb_coefficient_stirling(int j, int n)
{
    if (j % 2 != 0 || j <= 0 || j >= 2 * n) {
        throw DomainError("hb_coefficient_stirling: requires even j with 0 < j < 2n");
    }
    const double half = 0.5 * j;
    const double mag = 1.0 / (std::sqrt(std::numbers::pi) * std::pow(half * (n - half), 0.25));
    return mag * i_pow(n);
}

ComplexVector bs_column(int x, int y, const BeamSplitterConvention& convention)
{
    if (x < 0 || y < 0) throw DomainError("bs_column: photon numbers must be >= 0");
    const int m = x + y;
    // Real reduced amplitudes r_p with <p, m-p|U|x, y> = i^{x+p} r_p satisfy
    //   sqrt((p+1)(m-p)) r_{p+1} = -(x-y) r_p - sqrt(p(m-p+1)) r_{p-1}.
    std::vector<double> r(static_cast<std::size_t>(m) + 1, 0.0);
    const double edge = std::exp(-0.5 * m * std::numbers::ln2 + 0.5 * log_binomial(m, x));
    const double diff = static_cast<double>(x - y);
    r[0] = edge;
    r[m] = sign_pow(x) * edge;

    const int mid = m / 2;
    for (int p = 0; p < mid; ++p) {
        const double back = (p > 0) ? std::sqrt(static_cast<double>(p) * (m - p + 1)) * r[p - 1] : 0.0;
        r[p + 1] = (-diff * r[p] - back) / std::sqrt(static_cast<double>(p + 1) * (m - p));
    }
    for (int p = m; p > mid + 1; --p) {
        const double fwd = (p < m) ? std::sqrt(static_cast<double>(p + 1) * (m - p)) * r[p + 1] : 0.0;
        r[p - 1] = (-diff * r[p] - fwd) / std::sqrt(static_cast<double>(p) * (m - p + 1));
    }

    ComplexVector column(m + 1);
    for (int p = 0; p <= m; ++p) column[p] = r[p] * i_pow(x + p);
    if (!convention.is_canonical()) {
        for (int p = 0; p <= m; ++p) {
            column[p] *= std::polar(1.0, p * convention.output_phase_1 + (m - p) * convention.output_phase_2);
        }
    }
    return column;
}

Complex bs_matrix_element(int p, int q, int x, int y, const BeamSplitterConvention& convention)
{
    if (p < 0 || q < 0 || x < 0 || y < 0) throw DomainError("bs_matrix_element: photon numbers must be >= 0");
    if (p + q != x + y) return {0.0, 0.0};
    return bs_column(x, y, convention)[p];
}

ComplexMatrix bs_sector_block(int m, const BeamSplitterConvention& convention)
{
    if (m < 0) throw DomainError("bs_sector_block: m must be >= 0");
    ComplexMatrix block(m + 1, m + 1);
    for (int x = 0; x <= m; ++x) block.col(x) = bs_column(x, m - x, convention);
    return block;
}

} // namespace evenparity
