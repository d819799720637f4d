#pragma once

#include <Eigen/Dense>

#include "evenparity/fock.hpp"

namespace evenparity {

/// Balanced beam splitter U acting on creation operators as
///
///     U a1^dag U^dag = (a1^dag + i a2^dag) / sqrt2
///     U a2^dag U^dag = (i a1^dag + a2^dag) / sqrt2
///
/// i.e. the mode matrix (1/sqrt2)[[1, i], [i, 1]], equivalently
/// U = exp(i pi/2 Jx) with Jx = (a1^dag a2 + a2^dag a1)/2. With this choice
/// <j, 2n-j|U|n, n> = (i/2)^n sqrt((2n-j)! j!) / ((j/2)! (n-j/2)!) for even j.
///
/// Optional output-port phases give physically equivalent conventions:
/// they multiply <p, q|U|x, y> by exp(i (p phi1 + q phi2)) and leave every
/// photon-counting probability unchanged.
struct BeamSplitterConvention {
    double output_phase_1 = 0.0;
    double output_phase_2 = 0.0;

    Eigen::Matrix2cd mode_matrix() const;
    bool is_canonical() const { return output_phase_1 == 0.0 && output_phase_2 == 0.0; }
};

/// Holland-Burnett amplitude A_{j,n} = <j, 2n-j|U|n, n>; exactly zero for odd j.
/// Throws DomainError unless 0 <= j <= 2n.
Complex hb_coefficient(int j, int n);

/// Stirling form i^n / (sqrt(pi) [(j/2)(n - j/2)]^{1/4}). Analysis only.
/// Throws DomainError unless j is even and 0 < j < 2n.
Complex hb_coefficient_stirling(int j, int n);

/// Column U|x, y> in the sector x + y = m: entry p is <p, m-p|U|x, y>.
///
/// Each column is an eigenvector of U Jz U^dag = (i/2)(a2^dag a1 - a1^dag a2),
/// which is tridiagonal in the Fock basis. The column is generated by the
/// resulting three-term recurrence from both ends toward the middle, seeded
/// with the closed-form edge elements, so no alternating sums appear.
ComplexVector bs_column(int x, int y, const BeamSplitterConvention& convention = {});

/// <p, q|U|x, y>; zero when p + q != x + y. Throws DomainError on negative input.
Complex bs_matrix_element(int p, int q, int x, int y, const BeamSplitterConvention& convention = {});

/// (m+1) x (m+1) block of U in the sector with m photons; entry (p, x) is
/// <p, m-p|U|x, m-x>.
ComplexMatrix bs_sector_block(int m, const BeamSplitterConvention& convention = {});

} // namespace evenparity
