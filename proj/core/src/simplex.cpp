#include "evenparity/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace evenparity {

SearchResult nelder_mead_minimize(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options)
{
    const std::size_t dim = x0.size();
    SearchResult result;
    auto eval = [&](const std::vector<double>& x) {
        const double v = f(x);
        ++result.evaluations;
        result.trace.push_back({x, v});
        return v;
    };

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] = (x0[i] != 0.0) ? 1.05 * x0[i] : 2.5e-4;
    }
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(dim + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
        std::vector<std::vector<double>> s(dim + 1);
        std::vector<double> v(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) {
            s[i] = simplex[order[i]];
            v[i] = values[order[i]];
        }
        simplex = std::move(s);
        values = std::move(v);
    };

    auto blend = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
        std::vector<double> out(dim);
        for (std::size_t i = 0; i < dim; ++i) out[i] = c[i] + t * (w[i] - c[i]);
        return out;
    };

    sort_simplex();
    while (true) {
        double x_spread = 0.0;
        double f_spread = 0.0;
        for (std::size_t k = 1; k <= dim; ++k) {
            for (std::size_t i = 0; i < dim; ++i) x_spread = std::max(x_spread, std::abs(simplex[k][i] - simplex[0][i]));
            f_spread = std::max(f_spread, std::abs(values[k] - values[0]));
        }
        if (x_spread <= options.x_tol && f_spread <= options.f_tol) {
            result.converged = true;
            break;
        }
        if (result.evaluations >= options.max_evaluations) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[k][i] / static_cast<double>(dim);

        const std::vector<double>& worst = simplex[dim];
        const std::vector<double> xr = blend(centroid, worst, -1.0);
        const double fr = eval(xr);
        if (fr < values[0]) {
            const std::vector<double> xe = blend(centroid, worst, -2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[dim] = xe;
                values[dim] = fe;
            } else {
                simplex[dim] = xr;
                values[dim] = fr;
            }
        } else if (fr < values[dim - 1]) {
            simplex[dim] = xr;
            values[dim] = fr;
        } else {
            bool shrink = false;
            if (fr < values[dim]) {
                const std::vector<double> xc = blend(centroid, worst, -0.5);
                const double fc = eval(xc);
                if (fc <= fr) {
                    simplex[dim] = xc;
                    values[dim] = fc;
                } else {
                    shrink = true;
                }
            } else {
                const std::vector<double> xcc = blend(centroid, worst, 0.5);
                const double fcc = eval(xcc);
                if (fcc < values[dim]) {
                    simplex[dim] = xcc;
                    values[dim] = fcc;
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (std::size_t k = 1; k <= dim; ++k) {
                    simplex[k] = blend(simplex[0], simplex[k], 0.5);
                    values[k] = eval(simplex[k]);
                }
            }
        }
        sort_simplex();
    }
    result.x = simplex[0];
    result.value = values[0];
    return result;
}

SearchResult golden_section_maximize(const std::function<double(double)>& f, double a, double b, double tol,
                                     int max_evaluations)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    SearchResult result;
    auto eval = [&](double x) {
        const double v = f(x);
        ++result.evaluations;
        result.trace.push_back({{x}, v});
        return v;
    };
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > tol && result.evaluations < max_evaluations) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d);
        }
    }
    result.converged = (b - a) <= tol;
    if (fc > fd) {
        result.x = {c};
        result.value = fc;
    } else {
        result.x = {d};
        result.value = fd;
    }
    return result;
}

} // namespace evenparity
