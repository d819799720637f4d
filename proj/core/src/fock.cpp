#include "evenparity/fock.hpp"

#include <cmath>
#include <sstream>

namespace evenparity {

FockVector::FockVector() : amplitudes_(ComplexVector::Ones(1)) {}

FockVector::FockVector(int n_trunc)
{
    if (n_trunc < 0) throw DomainError("FockVector: n_trunc must be >= 0");
    amplitudes_ = ComplexVector::Zero(n_trunc + 1);
}

FockVector::FockVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes))
{
    if (amplitudes_.size() == 0) throw DomainError("FockVector: empty amplitude vector");
}

FockVector FockVector::number_state(int m, int n_trunc)
{
    if (m < 0 || m > n_trunc) throw DomainError("number_state: m outside 0..n_trunc");
    ComplexVector a = ComplexVector::Zero(n_trunc + 1);
    a[m] = 1.0;
    return FockVector(std::move(a));
}

FockVector FockVector::normalized() const
{
    const double norm2 = squared_norm();
    if (!(norm2 > 0.0)) throw DomainError("FockVector::normalized: zero-norm state");
    return FockVector(ComplexVector(amplitudes_ / std::sqrt(norm2)));
}

FockVector FockVector::resized(int n_trunc) const
{
    if (n_trunc < 0) throw DomainError("FockVector::resized: n_trunc must be >= 0");
    ComplexVector a = ComplexVector::Zero(n_trunc + 1);
    const int keep = std::min(dimension(), n_trunc + 1);
    a.head(keep) = amplitudes_.head(keep);
    return FockVector(std::move(a));
}

int FockVector::support_bound(double rel_tol) const
{
    const double threshold = rel_tol * squared_norm();
    for (int j = n_trunc(); j > 0; --j) {
        if (std::norm(amplitudes_[j]) > threshold) return j;
    }
    return 0;
}

TwoModeState::TwoModeState(ComplexMatrix amplitudes) : amplitudes_(std::move(amplitudes))
{
    if (amplitudes_.rows() == 0 || amplitudes_.rows() != amplitudes_.cols()) {
        throw DomainError("TwoModeState: amplitude matrix must be square and non-empty");
    }
}

bool TwoModeState::is_diagonal() const
{
    for (Eigen::Index j = 0; j < amplitudes_.rows(); ++j) {
        for (Eigen::Index k = 0; k < amplitudes_.cols(); ++k) {
            if (j != k && amplitudes_(j, k) != Complex{0.0, 0.0}) return false;
        }
    }
    return true;
}

double TwoModeState::mean_photon_number() const
{
    double weighted = 0.0;
    for (Eigen::Index j = 0; j < amplitudes_.rows(); ++j) {
        weighted += static_cast<double>(j) * amplitudes_.row(j).squaredNorm();
    }
    return weighted / squared_norm();
}

FockVector coherent_state(Complex beta, int n_trunc, Diagnostics* diag)
{
    if (n_trunc < 0) throw DomainError("coherent_state: n_trunc must be >= 0");
    ComplexVector a = ComplexVector::Zero(n_trunc + 1);
    const double mean = std::norm(beta);
    if (mean == 0.0) {
        a[0] = 1.0;
        return FockVector(std::move(a));
    }
    const double log_mag = std::log(std::abs(beta));
    const double phase = std::arg(beta);
    for (int j = 0; j <= n_trunc; ++j) {
        const double log_amp = -0.5 * mean + j * log_mag - 0.5 * log_factorial(j);
        a[j] = std::polar(std::exp(log_amp), j * phase);
    }
    FockVector out(std::move(a));
    const double captured = out.squared_norm();
    if (mean > 0.5 * n_trunc || captured < 1.0 - kTruncationTolerance) {
        std::ostringstream msg;
        msg << "|beta|^2 = " << mean << " on n_trunc = " << n_trunc << " captures norm " << captured;
        warn(diag, "coherent_state", msg.str(), captured);
    }
    return out;
}

TwoModeState two_mode_squeezed_vacuum(double lambda, int n_trunc, Diagnostics* diag)
{
    if (!(lambda >= 0.0 && lambda < 1.0)) {
        throw DomainError("two_mode_squeezed_vacuum: lambda must lie in [0, 1)");
    }
    if (n_trunc < 0) throw DomainError("two_mode_squeezed_vacuum: n_trunc must be >= 0");
    ComplexMatrix amps = ComplexMatrix::Zero(n_trunc + 1, n_trunc + 1);
    const double prefactor = std::sqrt(1.0 - lambda * lambda);
    double power = 1.0;
    for (int k = 0; k <= n_trunc; ++k) {
        amps(k, k) = prefactor * power;
        power *= lambda;
    }
    // (1 - l^2) sum_{k<=N} l^{2k} = 1 - l^{2(N+1)}
    const double captured = 1.0 - std::pow(lambda, 2.0 * (n_trunc + 1));
    if (captured < 1.0 - kTruncationTolerance) {
        std::ostringstream msg;
        msg << "lambda = " << lambda << " on n_trunc = " << n_trunc << " captures norm " << captured;
        warn(diag, "two_mode_squeezed_vacuum", msg.str(), captured);
    }
    return TwoModeState(std::move(amps));
}

namespace {
const double kDbPerNeper = 20.0 * std::log10(std::exp(1.0));
}

double squeezing_db_to_lambda(double db)
{
    if (db < 0.0) throw DomainError("squeezing_db_to_lambda: dB must be >= 0");
    return std::tanh(db / kDbPerNeper);
}

double lambda_to_squeezing_db(double lambda)
{
    if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("lambda_to_squeezing_db: lambda must lie in [0, 1)");
    return kDbPerNeper * std::atanh(lambda);
}

ComplexMatrix displacement_matrix(Complex alpha, int n_trunc, Diagnostics* diag)
{
    if (n_trunc < 0) throw DomainError("displacement_matrix: n_trunc must be >= 0");
    const int dim = n_trunc + 1;
    ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
    const double x = std::norm(alpha);
    if (x == 0.0) return ComplexMatrix::Identity(dim, dim);
    if (x > 0.25 * n_trunc) {
        std::ostringstream msg;
        msg << "|alpha|^2 = " << x << " exceeds n_trunc/4 = " << 0.25 * n_trunc;
        warn(diag, "displacement_matrix", msg.str());
    }

    const double log_abs = std::log(std::abs(alpha));
    const double theta = std::arg(alpha);
    for (int k = 0; k <= n_trunc; ++k) {
        const Complex lower_phase = std::polar(1.0, k * theta);
        const Complex upper_phase = sign_pow(k) * std::polar(1.0, -k * theta);
        // L_n^{(k)}(x) by the forward three-term recurrence in n.
        double l_prev = 0.0;
        double l_curr = 1.0;
        for (int n = 0; n + k <= n_trunc; ++n) {
            if (n > 0) {
                const double l_next = ((2.0 * (n - 1) + 1.0 + k - x) * l_curr - (n - 1 + k) * l_prev) / n;
                l_prev = l_curr;
                l_curr = l_next;
            }
            const int m = n + k;
            const double log_pref = 0.5 * (log_factorial(n) - log_factorial(m)) + k * log_abs - 0.5 * x;
            const double value = std::exp(log_pref) * l_curr;
            d(m, n) = value * lower_phase;
            if (k > 0) d(n, m) = value * upper_phase;
        }
    }
    return d;
}

FockVector displace(const FockVector& state, Complex alpha, Diagnostics* diag)
{
    const ComplexMatrix d = displacement_matrix(alpha, state.n_trunc(), diag);
    FockVector out(ComplexVector(d * state.amplitudes()));
    const double before = state.squared_norm();
    if (before > 0.0) {
        const double captured = out.squared_norm() / before;
        if (captured < 1.0 - kTruncationTolerance) {
            std::ostringstream msg;
            msg << "displaced state keeps fraction " << captured << " of its norm on n_trunc = "
                << state.n_trunc();
            warn(diag, "displace", msg.str(), captured);
        }
    }
    return out;
}

FockVector phase_rotate(const FockVector& state, double theta)
{
    ComplexVector a = state.amplitudes();
    for (Eigen::Index j = 0; j < a.size(); ++j) a[j] *= std::polar(1.0, theta * static_cast<double>(j));
    return FockVector(std::move(a));
}

Complex inner_product(const FockVector& a, const FockVector& b)
{
    const int common = std::min(a.dimension(), b.dimension());
    return a.amplitudes().head(common).dot(b.amplitudes().head(common));
}

ComplexMatrix outer_product(const FockVector& v)
{
    return v.amplitudes() * v.amplitudes().adjoint();
}

} // namespace evenparity
