#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

namespace {
double lfact(int n) { return std::lgamma(n + 1.0); }
double lbinom(int n, int k) { return lfact(n) - lfact(k) - lfact(n - k); }
} // namespace

Complex bs_element_direct(int p, int q, int x, int y)
{
    if (p + q != x + y) return {0.0, 0.0};
    const double s = 1.0 / std::sqrt(2.0);
    const Complex m11{s, 0}, m21{0, s}, m12{0, s}, m22{s, 0};
    Complex sum{0.0, 0.0};
    // k photons of the x group go to mode 1, p-k photons of the y group go to mode 1.
    for (int k = 0; k <= x; ++k) {
        const int l = p - k;
        if (l < 0 || l > y) continue;
        const double mag = std::exp(lbinom(x, k) + lbinom(y, l)
                                    + 0.5 * (lfact(p) + lfact(q) - lfact(x) - lfact(y)));
        sum += mag * std::pow(m11, k) * std::pow(m21, x - k) * std::pow(m12, l) * std::pow(m22, y - l);
    }
    return sum;
}

CMat dense_beam_splitter(int dmax)
{
    const int d = dmax + 1;
    Eigen::MatrixXd jx = Eigen::MatrixXd::Zero(d * d, d * d);
    // Jx = (a1^dag a2 + a2^dag a1)/2
    for (int p = 0; p <= dmax; ++p) {
        for (int q = 0; q <= dmax; ++q) {
            if (p + 1 <= dmax && q >= 1) {
                const double v = 0.5 * std::sqrt((p + 1.0) * q);
                jx(pair_index(p + 1, q - 1, dmax), pair_index(p, q, dmax)) += v;
                jx(pair_index(p, q, dmax), pair_index(p + 1, q - 1, dmax)) += v;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jx);
    const Eigen::VectorXd mu = es.eigenvalues();
    CMat phases = CMat::Zero(d * d, d * d);
    for (int i = 0; i < d * d; ++i) phases(i, i) = std::polar(1.0, 0.5 * std::numbers::pi * mu[i]);
    const CMat v = es.eigenvectors().cast<Complex>();
    return v * phases * v.adjoint();
}

CMat sector_block_expm(int m)
{
    Eigen::MatrixXd jx = Eigen::MatrixXd::Zero(m + 1, m + 1);
    for (int p = 0; p < m; ++p) {
        // a1^dag a2 |p, m-p> = sqrt((p+1)(m-p)) |p+1, m-p-1>
        const double v = 0.5 * std::sqrt((p + 1.0) * (m - p));
        jx(p + 1, p) = v;
        jx(p, p + 1) = v;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jx);
    CMat phases = CMat::Zero(m + 1, m + 1);
    for (int i = 0; i <= m; ++i) phases(i, i) = std::polar(1.0, 0.5 * std::numbers::pi * es.eigenvalues()[i]);
    const CMat v = es.eigenvectors().cast<Complex>();
    return v * phases * v.adjoint();
}

CMat joint_density(const CMat& rho, const CVec& phi, int dmax)
{
    const int d = dmax + 1;
    CMat out = CMat::Zero(d * d, d * d);
    for (int p = 0; p < rho.rows() && p <= dmax; ++p)
        for (int pp = 0; pp < rho.cols() && pp <= dmax; ++pp)
            for (int q = 0; q < phi.size() && q <= dmax; ++q)
                for (int qq = 0; qq < phi.size() && qq <= dmax; ++qq)
                    out(pair_index(p, q, dmax), pair_index(pp, qq, dmax)) =
                        rho(p, pp) * phi[q] * std::conj(phi[qq]);
    return out;
}

CMat apply_two_mode_loss(const CMat& rho, double eta, int dmax)
{
    const int d = dmax + 1;
    auto kraus = [&](int l) {
        Eigen::MatrixXd k = Eigen::MatrixXd::Zero(d, d);
        for (int m = l; m <= dmax; ++m) {
            const double w = std::exp(lbinom(m, l)) * std::pow(eta, m - l) * std::pow(1.0 - eta, l);
            k(m - l, m) = std::sqrt(w);
        }
        return k;
    };
    CMat out = CMat::Zero(d * d, d * d);
    for (int l1 = 0; l1 <= dmax; ++l1) {
        for (int l2 = 0; l2 <= dmax; ++l2) {
            Eigen::MatrixXd k1 = kraus(l1), k2 = kraus(l2);
            Eigen::MatrixXd k(d * d, d * d);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c)
                        for (int e = 0; e < d; ++e)
                            k(a * d + c, b * d + e) = k1(a, b) * k2(c, e);
            const CMat kc = k.cast<Complex>();
            out += kc * rho * kc.adjoint();
        }
    }
    return out;
}

double brute_force_detection_probability(const CMat& rho, const CVec& phi, int n, double eta, int dmax)
{
    const CMat u = dense_beam_splitter(dmax);
    CMat joint = joint_density(rho, phi, dmax);
    joint = u * joint * u.adjoint();
    if (eta < 1.0) joint = apply_two_mode_loss(joint, eta, dmax);
    return joint(pair_index(n, n, dmax), pair_index(n, n, dmax)).real();
}

CMat displacement_expm(Complex alpha, int n_trunc, int padding)
{
    const int d = n_trunc + 1 + padding;
    CMat gen = CMat::Zero(d, d);
    for (int k = 1; k < d; ++k) {
        const double s = std::sqrt(static_cast<double>(k));
        gen(k, k - 1) += alpha * s;            // alpha a^dag
        gen(k - 1, k) -= std::conj(alpha) * s; // -alpha^* a
    }
    const CMat full = gen.exp();
    return full.topLeftCorner(n_trunc + 1, n_trunc + 1);
}

double poisson_pmf(int k, double mu)
{
    if (mu == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(-mu + k * std::log(mu) - lfact(k));
}

LossSample monte_carlo_loss_weight(int x, int y, int n, double eta, int samples, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution survive(eta);
    long hits = 0;
    for (int s = 0; s < samples; ++s) {
        int cx = 0, cy = 0;
        for (int i = 0; i < x; ++i) cx += survive(rng) ? 1 : 0;
        for (int i = 0; i < y; ++i) cy += survive(rng) ? 1 : 0;
        if (cx == n && cy == n) ++hits;
    }
    const double p = static_cast<double>(hits) / samples;
    return {p, std::sqrt(std::max(p * (1.0 - p), 1.0 / samples) / samples)};
}

double hermite_function(int k, double x)
{
    // psi_k(x) = pi^{-1/4} (2^k k!)^{-1/2} H_k(x) e^{-x^2/2}, via the stable
    // normalized recurrence psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1}
    double prev = 0.0;
    double curr = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    for (int j = 0; j < k; ++j) {
        const double next = std::sqrt(2.0 / (j + 1)) * x * curr - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

double single_photon_wigner(double x, double p)
{
    const double r2 = x * x + p * p;
    return (2.0 * r2 - 1.0) * std::exp(-r2) / std::numbers::pi;
}

} // namespace oracle
