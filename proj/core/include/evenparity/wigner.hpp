#pragma once

#include <string>
#include <vector>

#include "evenparity/fock.hpp"

namespace evenparity {

/// Quadratures x = (a + a^dag)/sqrt2, p = (a - a^dag)/(i sqrt2): vacuum
/// variance 1/2 and int W dx dp = 1. A coherent state |alpha> sits at
/// (sqrt2 Re alpha, sqrt2 Im alpha).
inline constexpr const char* kWignerConvention = "x=(a+a^dag)/sqrt2, p=(a-a^dag)/(i sqrt2), int W dx dp = 1";

/// Uniform grid of nx by np midpoint cells over [x_min, x_max] x [p_min, p_max].
struct GridSpec {
    double x_min = -5.0;
    double x_max = 5.0;
    double p_min = -5.0;
    double p_max = 5.0;
    int nx = 281;
    int np = 281;

    double dx() const { return (x_max - x_min) / nx; }
    double dp() const { return (p_max - p_min) / np; }
    double x(int i) const { return x_min + (i + 0.5) * dx(); }
    double p(int k) const { return p_min + (k + 0.5) * dp(); }
};

/// Default window [-(|beta|+5), |beta|+5]^2 with 281 x 281 cells.
GridSpec default_grid(Complex beta);

struct WignerGrid {
    GridSpec spec;
    /// values(i, k) = W(x_i, p_k)
    Eigen::MatrixXd values;
    std::string convention = kWignerConvention;

    /// Midpoint-rule integral of W.
    double integral() const;
    double max_abs() const;
    /// Largest |W| on the outermost ring of cells.
    double boundary_max_abs() const;
};

/// Wigner function of a pure state or density matrix (normalized internally).
/// Warns when the boundary ring of |W| exceeds 1e-4 of the maximum.
WignerGrid wigner(const FockVector& state, const GridSpec& spec, Diagnostics* diag = nullptr);
WignerGrid wigner(const ComplexMatrix& rho, const GridSpec& spec, Diagnostics* diag = nullptr);

/// sum (|W| - W)/2 dx dp
double negativity_volume(const WignerGrid& grid);

/// Negativity volume of the state divided by that of the ideal two-component
/// cat of amplitude beta, both on default_grid(beta) unless a grid is given.
/// Throws DomainError when the ideal cat has no resolvable negativity.
double normalized_negativity(const FockVector& state, Complex beta, Diagnostics* diag = nullptr);
double normalized_negativity(const ComplexMatrix& rho, Complex beta, Diagnostics* diag = nullptr);
double normalized_negativity(const ComplexMatrix& rho, Complex beta, const GridSpec& spec,
                             Diagnostics* diag = nullptr);

struct WignerPeak {
    double x;
    double p;
    double value;
};

/// Cells whose |W| is no smaller than any of their eight neighbours and at
/// least `fraction` of the global max |W|, sorted by decreasing |W|.
std::vector<WignerPeak> local_maxima_abs(const WignerGrid& grid, double fraction);

} // namespace evenparity
