#include "evenparity/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace evenparity {

double fidelity(const FockVector& a, const FockVector& b)
{
    const double na = a.squared_norm();
    const double nb = b.squared_norm();
    if (!(na > 0.0) || !(nb > 0.0)) throw DomainError("fidelity: zero-norm state");
    return std::min(1.0, std::norm(inner_product(a, b)) / (na * nb));
}

double fidelity(const ComplexMatrix& rho, const FockVector& b)
{
    const double tr = rho.trace().real();
    const double nb = b.squared_norm();
    if (!(tr > 0.0) || !(nb > 0.0)) throw DomainError("fidelity: zero-norm state");
    const Eigen::Index k = std::min<Eigen::Index>(rho.rows(), b.dimension());
    const ComplexVector v = b.amplitudes().head(k);
    const double f = (v.adjoint() * rho.topLeftCorner(k, k) * v)(0, 0).real() / (tr * nb);
    return std::clamp(f, 0.0, 1.0);
}

double fidelity(const HeraldedState& a, const FockVector& b)
{
    if (a.is_pure()) return fidelity(a.pure(), b);
    return fidelity(std::get<ComplexMatrix>(a.state), b);
}

double IdealCat::normalization(Complex beta)
{
    return 1.0 / std::sqrt(2.0 * (1.0 + std::exp(-2.0 * std::norm(beta))));
}

IdealCat IdealCat::two_component(Complex beta, int n_trunc)
{
    // |beta> + |-beta> keeps only the even terms, doubled.
    const FockVector coh = coherent_state(beta, n_trunc);
    ComplexVector a = ComplexVector::Zero(n_trunc + 1);
    const double scale = 2.0 * normalization(beta);
    for (int j = 0; j <= n_trunc; j += 2) a[j] = scale * coh[j];
    return IdealCat(beta, 2, FockVector(std::move(a)));
}

IdealCat IdealCat::four_component(Complex beta, int n_trunc)
{
    const Complex ib{0.0, 1.0};
    const Complex phase = std::polar(1.0, -2.0 * std::norm(beta));
    ComplexVector a = coherent_state(beta - ib * beta, n_trunc).amplitudes()
                      + coherent_state(-beta + ib * beta, n_trunc).amplitudes()
                      + phase * (coherent_state(beta + ib * beta, n_trunc).amplitudes()
                                 + coherent_state(-beta - ib * beta, n_trunc).amplitudes());
    return IdealCat(beta, 4, FockVector(std::move(a)).normalized());
}

double cat_fidelity_closed_form(int n)
{
    if (n < 1 || n > 10000) throw DomainError("cat_fidelity_closed_form: requires 1 <= n <= 10000");
    std::vector<double> terms(static_cast<std::size_t>(n) + 1);
    const double log_n = std::log(static_cast<double>(n));
    for (int k = 0; k <= n; ++k) {
        terms[static_cast<std::size_t>(k)] = 2.0 * log_binomial(n, k) + log_factorial(2 * k) - 2.0 * k * log_n;
    }
    const double log_sum = log_sum_exp(terms);
    const double log_f = (2 * n + 1) * std::numbers::ln2 - n - std::log1p(std::exp(-2.0 * n)) - log_sum;
    return std::exp(log_f);
}

} // namespace evenparity
