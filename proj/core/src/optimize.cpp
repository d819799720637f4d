#include "evenparity/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "evenparity/metrics.hpp"

namespace evenparity {

namespace {

Complex direction(Complex beta) { return std::abs(beta) > 0.0 ? beta / std::abs(beta) : Complex{1.0, 0.0}; }

struct Candidate {
    std::vector<int> ints;
    std::vector<double> start;
};

struct CandidateOutcome {
    SearchResult search;
};

// Runs one local search per candidate and keeps the best. Candidates are
// visited in the given order and only a strictly better value replaces the
// incumbent, so ties resolve to the earliest candidate.
OptimizationResult search_candidates(const std::vector<Candidate>& candidates,
                                     const std::function<double(const std::vector<int>&, std::span<const double>)>& value,
                                     const std::vector<std::string>& int_names,
                                     const std::vector<std::string>& real_names, const OptimizeOptions& options)
{
    std::vector<CandidateOutcome> outcomes(candidates.size());
    NelderMeadOptions nm;
    nm.max_evaluations = options.max_evaluations;

#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < static_cast<int>(candidates.size()); ++c) {
        const Candidate& cand = candidates[static_cast<std::size_t>(c)];
        auto negated = [&](std::span<const double> x) { return -value(cand.ints, x); };
        outcomes[static_cast<std::size_t>(c)].search = nelder_mead_minimize(negated, cand.start, nm);
    }

    OptimizationResult result;
    std::size_t best = candidates.size();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const SearchResult& s = outcomes[c].search;
        result.evaluations += s.evaluations;
        for (const auto& e : s.trace) {
            TraceEntry t;
            for (std::size_t i = 0; i < int_names.size(); ++i) t.params[int_names[i]] = candidates[c].ints[i];
            for (std::size_t i = 0; i < real_names.size(); ++i) t.params[real_names[i]] = e.x[i];
            t.value = -e.value;
            result.trace.push_back(std::move(t));
        }
        if (best == candidates.size() || -s.value > result.best_value) {
            best = c;
            result.best_value = -s.value;
        }
    }
    if (best < candidates.size()) {
        const SearchResult& s = outcomes[best].search;
        for (std::size_t i = 0; i < int_names.size(); ++i) result.best_params[int_names[i]] = candidates[best].ints[i];
        for (std::size_t i = 0; i < real_names.size(); ++i) result.best_params[real_names[i]] = s.x[i];
        result.converged = s.converged;
    }
    return result;
}

std::vector<double> starts(double base, const OptimizeOptions& options)
{
    if (base == 0.0) return {0.0};
    std::vector<double> out;
    for (double f : options.start_factors) out.push_back(f * base);
    return out;
}

} // namespace

double evaluate_cat_fidelity(Complex beta, double lambda, int n, Complex alpha, int n_trunc)
{
    const HeraldedState h = herald_coherent(alpha, lambda, n, n_trunc);
    if (!(h.success_probability > 0.0)) return 0.0;
    return fidelity(h, IdealCat::two_component(beta, n_trunc).state());
}

OptimizationResult optimize_cat_fidelity(Complex beta, double lambda, const OptimizeOptions& options)
{
    const double b2 = std::norm(beta);
    const int n_lo = std::max(0, static_cast<int>(std::floor(b2)) - options.window);
    const int n_hi = std::min(options.n_trunc / 2, static_cast<int>(std::ceil(b2)) + options.window);
    const Complex u = direction(beta);
    const FockVector target = IdealCat::two_component(beta, options.n_trunc).state();

    auto value = [&](const std::vector<int>& ints, std::span<const double> x) {
        const HeraldedState h = herald_coherent(x[0] * u, lambda, ints[0], options.n_trunc);
        if (!(h.success_probability > 0.0)) return 0.0;
        return fidelity(h, target);
    };

    std::vector<Candidate> candidates;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (double a0 : starts(std::abs(beta) * lambda, options)) candidates.push_back({{n}, {a0}});
    }
    OptimizationResult result = search_candidates(candidates, value, {"n"}, {"alpha"}, options);
    const double a = result.best_params["alpha"];
    result.best_params["alpha_re"] = (a * u).real();
    result.best_params["alpha_im"] = (a * u).imag();
    result.diagnostics["baseline_fidelity"] =
        evaluate_cat_fidelity(beta, lambda, default_outcome(b2), beta * lambda, options.n_trunc);
    return result;
}

double cat_success_probability(Complex beta, double lambda, int n, int n_trunc)
{
    return cat_herald(beta, lambda, n, n_trunc).success_probability;
}

OptimizationResult optimal_lambda(Complex beta, int n, const OptimizeOptions& options)
{
    constexpr double lo = 0.01;
    constexpr double hi = 0.999;
    constexpr double h = 1e-6;
    OptimizationResult result;
    auto pr = [&](double l) {
        const double v = cat_success_probability(beta, l, n, options.n_trunc);
        result.trace.push_back({{{"lambda", l}}, v});
        ++result.evaluations;
        return v;
    };
    auto derivative = [&](double l) { return (pr(l + h) - pr(l - h)) / (2.0 * h); };

    const SearchResult golden = golden_section_maximize(pr, lo, hi, 1e-10, 400);
    double l_star = golden.x[0];
    bool converged = golden.converged;

    // Refine the stationary point by bisection on the derivative sign.
    double a = std::max(lo + h, l_star - 1e-4);
    double b = std::min(hi - h, l_star + 1e-4);
    if (derivative(a) > 0.0 && derivative(b) < 0.0) {
        for (int it = 0; it < 60 && b - a > 1e-14; ++it) {
            const double mid = 0.5 * (a + b);
            if (derivative(mid) > 0.0) {
                a = mid;
            } else {
                b = mid;
            }
        }
        l_star = 0.5 * (a + b);
    }

    const bool at_boundary = (l_star - lo < 1e-6) || (hi - l_star < 1e-6);
    const double d = (l_star - h > 0.0 && l_star + h < 1.0) ? derivative(l_star) : 0.0;
    result.best_value = pr(l_star);
    result.best_params["lambda"] = l_star;
    result.best_params["db"] = lambda_to_squeezing_db(l_star);
    result.converged = converged;
    result.diagnostics["derivative"] = d;
    result.diagnostics["relative_derivative"] = result.best_value > 0.0 ? std::abs(d) / result.best_value : 0.0;
    result.diagnostics["at_boundary"] = at_boundary ? 1.0 : 0.0;
    return result;
}

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_power_law: need at least two matching points");
    const std::size_t k = x.size();
    std::vector<double> lx(k), ly(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("fit_power_law: inputs must be positive");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        mx += lx[i] / static_cast<double>(k);
        my += ly[i] / static_cast<double>(k);
    }
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (!(sxx > 0.0)) throw DomainError("fit_power_law: x values must not all coincide");
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double r = ly[i] - (fit.intercept + fit.exponent * lx[i]);
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

ScalingResult scaling_fit(const std::vector<double>& sizes, const OptimizeOptions& options)
{
    if (sizes.size() < 5) throw DomainError("scaling_fit: need at least 5 sizes");
    const auto [mn, mx] = std::minmax_element(sizes.begin(), sizes.end());
    if (!(*mn > 0.0) || *mx < 4.0 * *mn) throw DomainError("scaling_fit: sizes must span at least a factor of 4");

    ScalingResult out;
    out.sizes = sizes;
    out.outcomes.resize(sizes.size());
    out.lambdas.resize(sizes.size());
    out.probabilities.resize(sizes.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
        const auto k = static_cast<std::size_t>(i);
        const int n = default_outcome(sizes[k]);
        const OptimizationResult r = optimal_lambda(Complex{std::sqrt(sizes[k]), 0.0}, n, options);
        out.outcomes[k] = n;
        out.lambdas[k] = r.best_params.at("lambda");
        out.probabilities[k] = r.best_value;
    }
    std::vector<double> amplitudes(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) amplitudes[i] = std::sqrt(sizes[i]);
    out.fit = fit_power_law(amplitudes, out.probabilities);
    return out;
}

double evaluate_four_component(Complex beta, double lambda, int n1, int n2, Complex control_amplitude,
                               Complex displacement, int n_trunc)
{
    SchemeConfig cfg;
    cfg.beta = beta;
    cfg.lambda = lambda;
    cfg.n = n1;
    cfg.second_outcome = n2;
    cfg.control_amplitude = control_amplitude;
    cfg.displacement = displacement;
    cfg.n_trunc = n_trunc;
    cfg.stages = 2;
    try {
        const HeraldedState out = four_component_pipeline(cfg);
        if (!(out.success_probability > 0.0)) return 0.0;
        return fidelity(out, IdealCat::four_component(beta, n_trunc).state());
    } catch (const TruncationError&) {
        return 0.0;
    } catch (const DomainError&) {
        return 0.0;
    }
}

OptimizationResult optimize_four_component(Complex beta, double lambda, const OptimizeOptions& options)
{
    const double b2 = std::norm(beta);
    const Complex u = direction(beta);
    const Complex iu = Complex{0.0, 1.0} * u;
    const int c1 = default_outcome(b2 * lambda * lambda);
    const int c2 = default_outcome(2.0 * b2);
    const FockVector target = IdealCat::four_component(beta, options.n_trunc).state();

    auto value = [&](const std::vector<int>& ints, std::span<const double> x) {
        SchemeConfig cfg;
        cfg.beta = beta;
        cfg.lambda = lambda;
        cfg.n = ints[0];
        cfg.second_outcome = ints[1];
        cfg.control_amplitude = x[0] * u;
        cfg.displacement = x[1] * iu;
        cfg.n_trunc = options.n_trunc;
        cfg.stages = 2;
        try {
            const HeraldedState out = four_component_pipeline(cfg);
            if (!(out.success_probability > 0.0)) return 0.0;
            return fidelity(out, target);
        } catch (const TruncationError&) {
            return 0.0;
        } catch (const DomainError&) {
            return 0.0;
        }
    };

    const double a0 = std::abs(beta) * lambda * lambda;
    const double d0 = std::abs(beta) * lambda;
    std::vector<Candidate> candidates;
    for (int n1 = std::max(0, c1 - options.window); n1 <= c1 + options.window; ++n1) {
        for (int n2 = std::max(0, c2 - options.window); n2 <= c2 + options.window; ++n2) {
            if (2 * std::max(n1, n2) > options.n_trunc) continue;
            if (a0 == 0.0 && d0 == 0.0) {
                candidates.push_back({{n1, n2}, {0.0, 0.0}});
                continue;
            }
            for (double f : options.start_factors) candidates.push_back({{n1, n2}, {f * a0, f * d0}});
        }
    }
    OptimizationResult result = search_candidates(candidates, value, {"n1", "n2"}, {"amplitude", "displacement"}, options);
    result.diagnostics["baseline_fidelity"] =
        evaluate_four_component(beta, lambda, c1, c2, beta * lambda * lambda, iu * std::abs(beta) * lambda, options.n_trunc);
    return result;
}

} // namespace evenparity
