#include "evenparity/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evenparity/metrics.hpp"

namespace evenparity {

namespace {

int density_support(const ComplexMatrix& rho)
{
    const double threshold = 1e-32 * rho.trace().real();
    for (Eigen::Index j = rho.rows() - 1; j > 0; --j) {
        if (rho(j, j).real() > threshold) return static_cast<int>(j);
    }
    return 0;
}

// Sum over the Laguerre-kernel basis functions W_{mn}(alpha) generated by
// the upward recursion in m and n, evaluated at alpha = (x + ip)/sqrt2.
double wigner_point(const ComplexMatrix& rho, int dim, Complex a, std::vector<Complex>& w)
{
    w[0] = std::exp(-2.0 * std::norm(a)) / std::numbers::pi;
    double out = rho(0, 0).real() * w[0].real();
    for (int n = 1; n < dim; ++n) {
        w[n] = 2.0 * a * w[n - 1] / std::sqrt(static_cast<double>(n));
        out += 2.0 * (rho(0, n) * w[n]).real();
    }
    const Complex ac = std::conj(a);
    for (int m = 1; m < dim; ++m) {
        const double sm = std::sqrt(static_cast<double>(m));
        Complex temp = w[m];
        w[m] = (2.0 * ac * temp - sm * w[m - 1]) / sm;
        out += rho(m, m).real() * w[m].real();
        for (int n = m + 1; n < dim; ++n) {
            const Complex next = (2.0 * a * w[n - 1] - sm * temp) / std::sqrt(static_cast<double>(n));
            temp = w[n];
            w[n] = next;
            out += 2.0 * (rho(m, n) * w[n]).real();
        }
    }
    return out;
}

} // namespace

GridSpec default_grid(Complex beta)
{
    const double r = std::abs(beta) + 5.0;
    return GridSpec{-r, r, -r, r, 281, 281};
}

double WignerGrid::integral() const { return values.sum() * spec.dx() * spec.dp(); }

double WignerGrid::max_abs() const { return values.cwiseAbs().maxCoeff(); }

double WignerGrid::boundary_max_abs() const
{
    const Eigen::Index r = values.rows() - 1;
    const Eigen::Index c = values.cols() - 1;
    return std::max({values.row(0).cwiseAbs().maxCoeff(), values.row(r).cwiseAbs().maxCoeff(),
                     values.col(0).cwiseAbs().maxCoeff(), values.col(c).cwiseAbs().maxCoeff()});
}

WignerGrid wigner(const FockVector& state, const GridSpec& spec, Diagnostics* diag)
{
    const int top = state.support_bound();
    const FockVector trimmed = state.resized(top).normalized();
    return wigner(outer_product(trimmed), spec, diag);
}

WignerGrid wigner(const ComplexMatrix& rho_in, const GridSpec& spec, Diagnostics* diag)
{
    if (rho_in.rows() != rho_in.cols() || rho_in.rows() == 0) throw DomainError("wigner: density matrix must be square");
    if (spec.nx < 2 || spec.np < 2 || !(spec.x_max > spec.x_min) || !(spec.p_max > spec.p_min)) {
        throw DomainError("wigner: invalid grid");
    }
    const double tr = rho_in.trace().real();
    if (!(tr > 0.0)) throw DomainError("wigner: zero-trace state");
    const int dim = density_support(rho_in) + 1;
    const ComplexMatrix rho = rho_in.topLeftCorner(dim, dim) / tr;

    WignerGrid grid;
    grid.spec = spec;
    grid.values.resize(spec.nx, spec.np);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

#pragma omp parallel
    {
        std::vector<Complex> w(static_cast<std::size_t>(dim));
#pragma omp for schedule(static)
        for (int i = 0; i < spec.nx; ++i) {
            for (int k = 0; k < spec.np; ++k) {
                const Complex a{spec.x(i) * inv_sqrt2, spec.p(k) * inv_sqrt2};
                grid.values(i, k) = wigner_point(rho, dim, a, w);
            }
        }
    }

    const double peak = grid.max_abs();
    const double edge = grid.boundary_max_abs();
    if (edge > 1e-4 * peak) {
        warn(diag, "wigner", "grid boundary carries |W| = " + std::to_string(edge / peak) + " of the peak");
    }
    return grid;
}

double negativity_volume(const WignerGrid& grid)
{
    double neg = 0.0;
    for (Eigen::Index i = 0; i < grid.values.size(); ++i) {
        const double v = grid.values.data()[i];
        if (v < 0.0) neg -= v;
    }
    return neg * grid.spec.dx() * grid.spec.dp();
}

double normalized_negativity(const FockVector& state, Complex beta, Diagnostics* diag)
{
    return normalized_negativity(outer_product(state), beta, default_grid(beta), diag);
}

double normalized_negativity(const ComplexMatrix& rho, Complex beta, Diagnostics* diag)
{
    return normalized_negativity(rho, beta, default_grid(beta), diag);
}

double normalized_negativity(const ComplexMatrix& rho, Complex beta, const GridSpec& spec, Diagnostics* diag)
{
    const int n_trunc = static_cast<int>(rho.rows()) - 1;
    const IdealCat ideal = IdealCat::two_component(beta, std::max(n_trunc, kDefaultTrunc));
    const double reference = negativity_volume(wigner(ideal.state(), spec, diag));
    if (!(reference > 1e-12)) throw DomainError("normalized_negativity: ideal cat negativity underflows");
    return negativity_volume(wigner(rho, spec, diag)) / reference;
}

std::vector<WignerPeak> local_maxima_abs(const WignerGrid& grid, double fraction)
{
    const Eigen::MatrixXd a = grid.values.cwiseAbs();
    const double threshold = fraction * a.maxCoeff();
    const int nx = static_cast<int>(a.rows());
    const int np = static_cast<int>(a.cols());
    std::vector<WignerPeak> peaks;
    for (int i = 0; i < nx; ++i) {
        for (int k = 0; k < np; ++k) {
            const double v = a(i, k);
            if (v < threshold || v == 0.0) continue;
            bool is_max = true;
            for (int di = -1; di <= 1 && is_max; ++di) {
                for (int dk = -1; dk <= 1; ++dk) {
                    if (di == 0 && dk == 0) continue;
                    const int ii = i + di;
                    const int kk = k + dk;
                    if (ii < 0 || kk < 0 || ii >= nx || kk >= np) continue;
                    if (a(ii, kk) > v) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max) peaks.push_back({grid.spec.x(i), grid.spec.p(k), grid.values(i, k)});
        }
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [](const WignerPeak& l, const WignerPeak& r) { return std::abs(l.value) > std::abs(r.value); });
    return peaks;
}

} // namespace evenparity
