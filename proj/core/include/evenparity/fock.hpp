#pragma once

#include <Eigen/Dense>

#include "evenparity/diagnostics.hpp"
#include "evenparity/numeric.hpp"

namespace evenparity {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Single-mode pure state on photon numbers 0..n_trunc.
///
/// Amplitudes need not be normalized: heralded states keep their squared
/// norm because it is the heralding probability.
class FockVector {
public:
    /// Vacuum on a single-level basis.
    FockVector();

    /// All-zero vector on 0..n_trunc.
    explicit FockVector(int n_trunc);

    explicit FockVector(ComplexVector amplitudes);

    /// |m> on 0..n_trunc.
    static FockVector number_state(int m, int n_trunc);

    int n_trunc() const { return static_cast<int>(amplitudes_.size()) - 1; }
    int dimension() const { return static_cast<int>(amplitudes_.size()); }

    /// Amplitude on |j>; zero for j outside 0..n_trunc.
    Complex amplitude(int j) const
    {
        return (j >= 0 && j < dimension()) ? amplitudes_[j] : Complex{0.0, 0.0};
    }
    Complex operator[](int j) const { return amplitude(j); }

    const ComplexVector& amplitudes() const { return amplitudes_; }

    double squared_norm() const { return amplitudes_.squaredNorm(); }
    bool is_normalized(double tol = 1e-12) const { return std::abs(squared_norm() - 1.0) <= tol; }

    /// Unit-norm copy. Throws DomainError on a zero vector.
    FockVector normalized() const;

    /// Zero-padded or cut copy on 0..n_trunc.
    FockVector resized(int n_trunc) const;

    /// Largest j with |a_j|^2 > rel_tol * squared_norm(); 0 for the zero vector.
    int support_bound(double rel_tol = 1e-32) const;

private:
    ComplexVector amplitudes_;
};

/// Two-mode pure state; amplitudes(j, k) multiplies |j, k>.
class TwoModeState {
public:
    explicit TwoModeState(ComplexMatrix amplitudes);

    int n_trunc() const { return static_cast<int>(amplitudes_.rows()) - 1; }
    const ComplexMatrix& amplitudes() const { return amplitudes_; }
    Complex amplitude(int j, int k) const { return amplitudes_(j, k); }
    double squared_norm() const { return amplitudes_.squaredNorm(); }
    bool is_diagonal() const;

    /// Mean photon number in mode 1 (equal to mode 2 for diagonal states),
    /// with the state normalized.
    double mean_photon_number() const;

private:
    ComplexMatrix amplitudes_;
};

/// Poissonian coherent state |beta>, amplitudes built in log space.
/// Warns when |beta|^2 > n_trunc/2 or the captured norm drops below 1 - 1e-6.
FockVector coherent_state(Complex beta, int n_trunc, Diagnostics* diag = nullptr);

/// sqrt(1 - lambda^2) sum_k lambda^k |k, k>, lambda = tanh(r) in [0, 1).
TwoModeState two_mode_squeezed_vacuum(double lambda, int n_trunc, Diagnostics* diag = nullptr);

/// lambda = tanh(r) with r = dB / (20 log10 e).
double squeezing_db_to_lambda(double db);
double lambda_to_squeezing_db(double lambda);

/// <m|D(alpha)|n> for m, n <= n_trunc from the associated-Laguerre closed
/// form. Elements are exact; only the basis is truncated. Warns when
/// |alpha|^2 > n_trunc / 4.
ComplexMatrix displacement_matrix(Complex alpha, int n_trunc, Diagnostics* diag = nullptr);

/// D(alpha)|state>, returned on the same basis.
FockVector displace(const FockVector& state, Complex alpha, Diagnostics* diag = nullptr);

/// exp(i theta n) applied to the state.
FockVector phase_rotate(const FockVector& state, double theta);

/// <a|b> with zero padding on mismatched truncations.
Complex inner_product(const FockVector& a, const FockVector& b);

/// |v><v|
ComplexMatrix outer_product(const FockVector& v);

} // namespace evenparity
