#include "evenparity/detector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evenparity/beam_splitter.hpp"

namespace evenparity {

namespace {

void check_eta(double eta)
{
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("detector: eta must lie in (0, 1]");
}

// sum_{x=n}^{cutoff} C(x,n) eta^{n+1} (1-eta)^{x-n}; tends to 1 as cutoff grows.
double captured_single_detector(int n, double eta, int cutoff)
{
    if (eta == 1.0) return 1.0;
    const double log_eta = std::log(eta);
    const double log_loss = std::log1p(-eta);
    double sum = 0.0;
    for (int x = n; x <= cutoff; ++x) {
        sum += std::exp(log_binomial(x, n) + (n + 1) * log_eta + (x - n) * log_loss);
    }
    return std::min(sum, 1.0);
}

Complex vdot(const ComplexVector& a, const ComplexVector& b)
{
    const Eigen::Index k = std::min(a.size(), b.size());
    return a.head(k).dot(b.head(k));
}

} // namespace

int DetectorEffect::dimension() const
{
    int dim = 1;
    for (const auto& c : components) dim = std::max(dim, c.vector.dimension());
    return dim;
}

double DetectorEffect::trace() const
{
    double t = 0.0;
    for (const auto& c : components) t += c.weight * c.vector.squared_norm();
    return t;
}

ComplexMatrix DetectorEffect::matrix() const
{
    const int dim = dimension();
    ComplexMatrix pi = ComplexMatrix::Zero(dim, dim);
    for (const auto& c : components) {
        const ComplexVector v = c.vector.resized(dim - 1).amplitudes();
        pi.noalias() += c.weight * v * v.adjoint();
    }
    return pi;
}

int default_povm_cutoff(int n, double eta)
{
    check_eta(eta);
    // The small offset keeps exact products such as 10 * 0.3 * 5 from rounding up.
    return n + static_cast<int>(std::ceil(10.0 * (1.0 - eta) * n - 1e-9)) + 20;
}

FockVector flat_control(int n_trunc)
{
    if (n_trunc < 0) throw DomainError("flat_control: n_trunc must be >= 0");
    return FockVector(ComplexVector(ComplexVector::Ones(n_trunc + 1)));
}

FockVector project_chi(const FockVector& control, int n)
{
    if (n < 0) throw DomainError("project_chi: n must be >= 0");
    if (control.n_trunc() < 2 * n) throw DomainError("project_chi: control truncation below 2n");
    ComplexVector chi = ComplexVector::Zero(control.dimension());
    for (int j = 0; j <= 2 * n; j += 2) chi[j] = std::conj(control[2 * n - j]) * hb_coefficient(j, n);
    return FockVector(std::move(chi));
}

double detection_probability(const FockVector& input, const FockVector& control, int n)
{
    return std::norm(inner_product(project_chi(control, n), input));
}

double detection_probability(const ComplexMatrix& rho, const FockVector& control, int n)
{
    DetectorEffect ideal;
    ideal.n = n;
    ideal.components.push_back({1.0, project_chi(control, n), n, n});
    return detection_probability(rho, ideal);
}

double detection_probability(const FockVector& input, const DetectorEffect& effect)
{
    double pr = 0.0;
    for (const auto& c : effect.components) pr += c.weight * std::norm(inner_product(c.vector, input));
    return pr;
}

double detection_probability(const ComplexMatrix& rho, const DetectorEffect& effect)
{
    if (rho.rows() != rho.cols()) throw DomainError("detection_probability: density matrix must be square");
    double pr = 0.0;
    for (const auto& c : effect.components) {
        const Eigen::Index k = std::min<Eigen::Index>(rho.rows(), c.vector.dimension());
        const ComplexVector v = c.vector.amplitudes().head(k);
        pr += c.weight * (v.adjoint() * rho.topLeftCorner(k, k) * v)(0, 0).real();
    }
    return pr;
}

DetectorEffect povm_element(const FockVector& control, int n, double eta,
                            const PovmOptions& options, Diagnostics* diag)
{
    check_eta(eta);
    if (n < 0) throw DomainError("povm_element: n must be >= 0");

    DetectorEffect effect;
    effect.eta = eta;
    effect.n = n;
    effect.control = control;

    if (eta == 1.0) {
        effect.cutoff = n;
        FockVector chi = project_chi(control.resized(std::max(control.n_trunc(), 2 * n)), n);
        if (options.n_trunc) chi = chi.resized(*options.n_trunc);
        effect.components.push_back({1.0, std::move(chi), n, n});
        return effect;
    }

    const int cutoff = options.cutoff.value_or(default_povm_cutoff(n, eta));
    if (cutoff < n) throw DomainError("povm_element: cutoff must be >= n");
    const int n_trunc = options.n_trunc.value_or(2 * cutoff);
    if (n_trunc < 0) throw DomainError("povm_element: n_trunc must be >= 0");
    effect.cutoff = cutoff;

    const double s = captured_single_detector(n, eta, cutoff);
    effect.tail_weight = std::max(0.0, 1.0 - s * s);
    if (effect.tail_weight > 1e-6) {
        warn(diag, "povm_element",
             "x, y cutoff " + std::to_string(cutoff) + " drops relative POVM weight "
                 + std::to_string(effect.tail_weight),
             1.0 - effect.tail_weight);
    }

    const int span = cutoff - n + 1;
    const double log_eta = std::log(eta);
    const double log_loss = std::log1p(-eta);
    effect.components.resize(static_cast<std::size_t>(span) * span);

#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < span * span; ++idx) {
        const int x = n + idx / span;
        const int y = n + idx % span;
        const int m = x + y;
        const double log_w = log_binomial(x, n) + log_binomial(y, n) + 2 * n * log_eta + (m - 2 * n) * log_loss;
        const ComplexVector column = bs_column(x, y);
        ComplexVector v = ComplexVector::Zero(n_trunc + 1);
        for (int p = 0; p <= std::min(m, n_trunc); ++p) {
            v[p] = sign_pow(p) * std::conj(control[m - p]) * column[p];
        }
        effect.components[static_cast<std::size_t>(idx)] = {std::exp(log_w), FockVector(std::move(v)), x, y};
    }
    return effect;
}

std::vector<double> povm_diagonal(const DetectorEffect& effect)
{
    std::vector<double> pr(static_cast<std::size_t>(effect.dimension()), 0.0);
    for (const auto& c : effect.components) {
        for (int j = 0; j < c.vector.dimension(); ++j) pr[static_cast<std::size_t>(j)] += c.weight * std::norm(c.vector[j]);
    }
    return pr;
}

double projector_fidelity(const DetectorEffect& effect, const FockVector& chi)
{
    const double chi_norm = chi.squared_norm();
    if (!(chi_norm > 0.0)) throw DomainError("projector_fidelity: zero chi");
    const double tr = effect.trace();
    if (!(tr > 0.0)) throw DomainError("projector_fidelity: Pi has zero trace");
    double num = 0.0;
    for (const auto& c : effect.components) num += c.weight * std::norm(vdot(chi.amplitudes(), c.vector.amplitudes()));
    return std::clamp(num / (chi_norm * tr), 0.0, 1.0);
}

} // namespace evenparity
