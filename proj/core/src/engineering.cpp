#include "evenparity/engineering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evenparity/beam_splitter.hpp"

namespace evenparity {

namespace {

void check_lambda(double lambda)
{
    if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("lambda must lie in [0, 1)");
}

// sqrt(1 - lambda^2) lambda^j for j = 0..n_trunc
Eigen::VectorXd tmsv_profile(double lambda, int n_trunc, Diagnostics* diag)
{
    Eigen::VectorXd s(n_trunc + 1);
    const double pre = std::sqrt(1.0 - lambda * lambda);
    for (int j = 0; j <= n_trunc; ++j) s[j] = pre * std::pow(lambda, j);
    const double captured = 1.0 - std::pow(lambda, 2.0 * (n_trunc + 1));
    if (captured < 1.0 - kTruncationTolerance) {
        warn(diag, "two_mode_squeezed_vacuum",
             "lambda = " + std::to_string(lambda) + " is not captured by n_trunc = " + std::to_string(n_trunc),
             captured);
    }
    return s;
}

HeraldedState from_density(ComplexMatrix rho)
{
    HeraldedState out;
    out.success_probability = rho.trace().real();
    out.stage_probabilities = {out.success_probability};
    out.state = std::move(rho);
    return out;
}

} // namespace

double SchemeConfig::lambda_value() const
{
    if (lambda && squeezing_db) throw DomainError("give either lambda or squeezing in dB, not both");
    if (lambda) return *lambda;
    if (squeezing_db) return squeezing_db_to_lambda(*squeezing_db);
    throw DomainError("squeezing not specified: set lambda or dB");
}

SchemeConfig SchemeConfig::resolved() const
{
    SchemeConfig r = *this;
    const double l = lambda_value();
    check_lambda(l);
    r.lambda = l;
    r.squeezing_db.reset();
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("eta must lie in (0, 1]");
    if (stages != 1 && stages != 2) throw DomainError("stages must be 1 or 2");
    if (n_trunc < 0) throw DomainError("n_trunc must be >= 0");

    const double b2 = std::norm(beta);
    if (stages == 1) {
        if (!r.n) r.n = default_outcome(b2);
        if (!r.control_amplitude) r.control_amplitude = beta * l;
        r.eta_stage2.reset();
        r.displacement.reset();
        r.second_outcome.reset();
    } else {
        if (!r.n) r.n = default_outcome(b2 * l * l);
        if (!r.control_amplitude) r.control_amplitude = beta * l * l;
        if (!r.displacement) r.displacement = Complex{0.0, 1.0} * beta * l;
        if (!r.second_outcome) r.second_outcome = default_outcome(2.0 * b2);
        if (!r.eta_stage2) r.eta_stage2 = eta;
        if (!(*r.eta_stage2 > 0.0 && *r.eta_stage2 <= 1.0)) throw DomainError("eta_stage2 must lie in (0, 1]");
        if (*r.second_outcome < 0) throw DomainError("second outcome must be >= 0");
    }
    if (*r.n < 0) throw DomainError("n must be >= 0");
    const int n_max = std::max(*r.n, r.second_outcome.value_or(0));
    if (n_trunc < 2 * n_max) throw DomainError("n_trunc must be at least twice the largest outcome");
    return r;
}

int HeraldedState::n_trunc() const
{
    if (is_pure()) return pure().n_trunc();
    return static_cast<int>(std::get<ComplexMatrix>(state).rows()) - 1;
}

ComplexMatrix HeraldedState::density_matrix() const
{
    if (is_pure()) return outer_product(pure());
    return std::get<ComplexMatrix>(state);
}

FockVector HeraldedState::normalized_pure() const { return pure().normalized(); }

ComplexMatrix HeraldedState::normalized_density() const
{
    ComplexMatrix rho = density_matrix();
    const double tr = rho.trace().real();
    if (!(tr > 0.0)) throw DomainError("HeraldedState: zero-probability state");
    return rho / tr;
}

double HeraldedState::purity() const
{
    if (is_pure()) return 1.0;
    const ComplexMatrix rho = normalized_density();
    return (rho * rho).trace().real();
}

int default_outcome(double mean)
{
    if (!(mean > 0.5)) return 0;
    return static_cast<int>(std::ceil(mean - 0.5));
}

HeraldedState herald(const FockVector& control, double lambda, int n)
{
    check_lambda(lambda);
    const FockVector chi = project_chi(control, n);
    const Eigen::VectorXd s = tmsv_profile(lambda, chi.n_trunc(), nullptr);
    ComplexVector psi = ComplexVector::Zero(chi.dimension());
    for (int j = 0; j <= 2 * n; j += 2) psi[j] = s[j] * std::conj(chi[j]);

    HeraldedState out;
    out.state = FockVector(std::move(psi));
    out.success_probability = out.pure().squared_norm();
    out.stage_probabilities = {out.success_probability};
    out.config.lambda = lambda;
    out.config.n = n;
    out.config.n_trunc = control.n_trunc();
    return out;
}

HeraldedState herald_coherent(Complex alpha, double lambda, int n, int n_trunc)
{
    HeraldedState out = herald(coherent_state(alpha, n_trunc), lambda, n);
    out.config.control_amplitude = alpha;
    return out;
}

HeraldedState cat_herald(Complex beta, double lambda, int n, int n_trunc)
{
    HeraldedState out = herald_coherent(beta * lambda, lambda, n, n_trunc);
    out.config.beta = beta;
    return out;
}

HeraldedState herald_lossy(const FockVector& control, double lambda, int n, double eta,
                           int n_trunc, const PovmOptions& options, Diagnostics* diag)
{
    check_lambda(lambda);
    if (eta == 1.0) {
        if (control.n_trunc() < 2 * n) throw DomainError("herald_lossy: control truncation below 2n");
        HeraldedState out = herald(control, lambda, n);
        out.state = out.pure().resized(std::max(n_trunc, 2 * n));
        out.config.eta = eta;
        return out;
    }

    const DetectorEffect effect = povm_element(control, n, eta, options, diag);
    const Eigen::VectorXd s = tmsv_profile(lambda, n_trunc, diag);
    const auto k = static_cast<Eigen::Index>(effect.components.size());
    ComplexMatrix psi = ComplexMatrix::Zero(n_trunc + 1, k);
    for (Eigen::Index c = 0; c < k; ++c) {
        const auto& comp = effect.components[static_cast<std::size_t>(c)];
        const double sw = std::sqrt(comp.weight);
        const int top = std::min(n_trunc, comp.vector.n_trunc());
        for (int j = 0; j <= top; ++j) psi(j, c) = sw * s[j] * std::conj(comp.vector[j]);
    }
    ComplexMatrix rho = ComplexMatrix::Zero(n_trunc + 1, n_trunc + 1);
    rho.selfadjointView<Eigen::Lower>().rankUpdate(psi);
    rho = rho.selfadjointView<Eigen::Lower>();

    HeraldedState out = from_density(std::move(rho));
    out.config.lambda = lambda;
    out.config.n = n;
    out.config.eta = eta;
    out.config.n_trunc = n_trunc;
    out.config.povm = options;
    return out;
}

HeraldedState herald_lossy(const ComplexMatrix& control, double lambda, int n, double eta,
                           int n_trunc, const PovmOptions& options, Diagnostics* diag)
{
    if (control.rows() != control.cols()) throw DomainError("herald_lossy: control density matrix must be square");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(control);
    const Eigen::VectorXd mu = es.eigenvalues();
    const double top = mu.maxCoeff();
    ComplexMatrix rho = ComplexMatrix::Zero(n_trunc + 1, n_trunc + 1);
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
        if (!(mu[i] > 1e-14 * top)) continue;
        const HeraldedState part = herald_lossy(FockVector(ComplexVector(es.eigenvectors().col(i))), lambda, n, eta,
                                                n_trunc, options, diag);
        const ComplexMatrix d = part.density_matrix();
        const Eigen::Index m = std::min(d.rows(), rho.rows());
        rho.topLeftCorner(m, m) += mu[i] * d.topLeftCorner(m, m);
    }
    HeraldedState out = from_density(std::move(rho));
    out.config.lambda = lambda;
    out.config.n = n;
    out.config.eta = eta;
    out.config.n_trunc = n_trunc;
    out.config.povm = options;
    return out;
}

HeraldedState cat_herald_lossy(Complex beta, double lambda, int n, double eta,
                               int n_trunc, const PovmOptions& options, Diagnostics* diag)
{
    HeraldedState out = herald_lossy(coherent_state(beta * lambda, n_trunc, diag), lambda, n, eta, n_trunc, options, diag);
    out.config.beta = beta;
    out.config.control_amplitude = beta * lambda;
    return out;
}

HeraldedState four_component_pipeline(const SchemeConfig& config, Diagnostics* diag, PipelineStages* stages)
{
    SchemeConfig cfg = config;
    cfg.stages = 2;
    const SchemeConfig r = cfg.resolved();
    const double lambda = *r.lambda;
    const int n_trunc = r.n_trunc;

    const FockVector control = coherent_state(*r.control_amplitude, n_trunc, diag);
    const HeraldedState first = herald_lossy(control, lambda, *r.n, r.eta, n_trunc, r.povm, diag);
    const double p1 = first.success_probability;
    if (!(p1 > 0.0)) throw DomainError("four_component_pipeline: stage-1 outcome has zero probability");

    const ComplexMatrix d = displacement_matrix(*r.displacement, n_trunc, diag);
    HeraldedState second;
    ComplexMatrix displaced_rho;
    if (first.is_pure()) {
        const ComplexVector cat = first.pure().resized(n_trunc).amplitudes() / std::sqrt(p1);
        const ComplexVector displaced = d * cat;
        const double kept = displaced.squaredNorm();
        if (1.0 - kept > 1e-4) {
            throw TruncationError("four_component_pipeline: displaced intermediate leaks "
                                  + std::to_string(1.0 - kept) + " of its norm past n_trunc");
        }
        const FockVector next(ComplexVector(displaced / std::sqrt(kept)));
        second = herald_lossy(next, lambda, *r.second_outcome, *r.eta_stage2, n_trunc, r.povm, diag);
        if (stages) displaced_rho = outer_product(next);
    } else {
        const ComplexMatrix cat = std::get<ComplexMatrix>(first.state) / p1;
        ComplexMatrix displaced = d * cat * d.adjoint();
        const double kept = displaced.trace().real();
        if (1.0 - kept > 1e-4) {
            throw TruncationError("four_component_pipeline: displaced intermediate leaks "
                                  + std::to_string(1.0 - kept) + " of its norm past n_trunc");
        }
        displaced /= kept;
        second = herald_lossy(displaced, lambda, *r.second_outcome, *r.eta_stage2, n_trunc, r.povm, diag);
        if (stages) displaced_rho = std::move(displaced);
    }
    const double p2 = second.success_probability;

    HeraldedState out;
    if (second.is_pure()) {
        out.state = FockVector(ComplexVector(second.pure().amplitudes() * std::sqrt(p1)));
    } else {
        out.state = ComplexMatrix(std::get<ComplexMatrix>(second.state) * p1);
    }
    out.success_probability = p1 * p2;
    out.stage_probabilities = {p1, p2};
    out.config = r;

    if (stages) {
        stages->control = outer_product(control.normalized());
        stages->cat = first.normalized_density();
        stages->displaced = std::move(displaced_rho);
        stages->output = p2 > 0.0 ? second.normalized_density() : ComplexMatrix::Zero(n_trunc + 1, n_trunc + 1);
    }
    return out;
}

HeraldedState prepare(const SchemeConfig& config, Diagnostics* diag)
{
    const SchemeConfig r = config.resolved();
    if (r.stages == 2) return four_component_pipeline(r, diag);
    const FockVector control = coherent_state(*r.control_amplitude, r.n_trunc, diag);
    HeraldedState out = herald_lossy(control, *r.lambda, *r.n, r.eta, r.n_trunc, r.povm, diag);
    out.config = r;
    return out;
}

double success_probability(const SchemeConfig& config) { return prepare(config).success_probability; }

} // namespace evenparity
