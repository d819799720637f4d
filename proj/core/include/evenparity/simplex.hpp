#pragma once

#include <functional>
#include <span>
#include <vector>

namespace evenparity {

struct Evaluation {
    std::vector<double> x;
    double value;
};

struct NelderMeadOptions {
    int max_evaluations = 500;
    double x_tol = 1e-8;
    double f_tol = 1e-12;
};

struct SearchResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
    std::vector<Evaluation> trace;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes f with the Nelder-Mead simplex (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). The initial simplex perturbs each
/// coordinate by 5% of its value, or by 2.5e-4 when it is zero. Stops when
/// the simplex spread falls below x_tol and f_tol or the budget runs out.
SearchResult nelder_mead_minimize(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options = {});

/// Maximizes a unimodal f on [a, b] by golden-section search until the
/// bracket is narrower than tol.
SearchResult golden_section_maximize(const std::function<double(double)>& f, double a, double b, double tol = 1e-10,
                                     int max_evaluations = 500);

} // namespace evenparity
