#pragma once

#include <map>
#include <string>
#include <vector>

#include "evenparity/engineering.hpp"
#include "evenparity/simplex.hpp"

namespace evenparity {

struct TraceEntry {
    std::map<std::string, double> params;
    double value;
};

struct OptimizationResult {
    std::map<std::string, double> best_params;
    double best_value = 0.0;
    std::vector<TraceEntry> trace;
    bool converged = false;
    int evaluations = 0;
    /// Extra scalars such as baseline values, derivatives, boundary flags.
    std::map<std::string, double> diagnostics;
};

struct OptimizeOptions {
    int n_trunc = kDefaultTrunc;
    /// Objective calls per continuous local search.
    int max_evaluations = 500;
    /// Multipliers of the analytic start point.
    std::vector<double> start_factors{0.8, 1.0, 1.2};
    /// Half-width of the integer windows.
    int window = 2;
};

/// Fidelity of herald_coherent(alpha, lambda, n) with the ideal two-component cat of amplitude beta.
double evaluate_cat_fidelity(Complex beta, double lambda, int n, Complex alpha, int n_trunc = kDefaultTrunc);

/// Maximizes evaluate_cat_fidelity over integer n in
/// [floor|beta|^2 - window, ceil|beta|^2 + window] and over the control
/// amplitude alpha = a e^{i arg beta}, starting from a = |beta| lambda.
/// best_params: n, alpha (real a), alpha_re, alpha_im.
/// diagnostics: baseline_fidelity at (round|beta|^2, beta lambda).
OptimizationResult optimize_cat_fidelity(Complex beta, double lambda, const OptimizeOptions& options = {});

/// Success probability of cat_herald(beta, lambda, n).
double cat_success_probability(Complex beta, double lambda, int n, int n_trunc = kDefaultTrunc);

/// Maximizes cat_success_probability over lambda in (0.01, 0.999) by golden
/// section, then refines the root of the central-difference derivative.
/// best_params: lambda, db. diagnostics: derivative, relative_derivative,
/// at_boundary (0 or 1).
OptimizationResult optimal_lambda(Complex beta, int n, const OptimizeOptions& options = {});

struct PowerLawFit {
    double exponent = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Least squares of log y against log x.
PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingResult {
    PowerLawFit fit;
    std::vector<double> sizes;
    std::vector<int> outcomes;
    std::vector<double> lambdas;
    std::vector<double> probabilities;
};

/// For each |beta|^2 in sizes, the optimal success probability at
/// n = round(|beta|^2), and its power-law exponent in |beta|.
/// Throws DomainError for fewer than 5 sizes or a span below a factor of 4.
ScalingResult scaling_fit(const std::vector<double>& sizes, const OptimizeOptions& options = {});

/// Fidelity of the two-stage pipeline output with the ideal four-component cat.
/// Returns 0 when the configuration cannot herald or overflows the truncation.
double evaluate_four_component(Complex beta, double lambda, int n1, int n2, Complex control_amplitude,
                               Complex displacement, int n_trunc = kDefaultTrunc);

/// Maximizes evaluate_four_component over (n1, n2) in a window around
/// (round(|beta lambda|^2), round(2|beta|^2)), the control amplitude along
/// beta and the displacement along i beta.
/// best_params: n1, n2, amplitude, displacement (real coordinates along
/// beta and i beta). diagnostics: baseline_fidelity at the default config.
OptimizationResult optimize_four_component(Complex beta, double lambda, const OptimizeOptions& options = {});

} // namespace evenparity
