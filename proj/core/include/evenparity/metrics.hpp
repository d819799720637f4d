#pragma once

#include "evenparity/engineering.hpp"
#include "evenparity/fock.hpp"

namespace evenparity {

/// |<a|b>|^2 with both arguments normalized internally.
/// Throws DomainError on a zero-norm argument.
double fidelity(const FockVector& a, const FockVector& b);

/// <b|rho|b> / (Tr rho <b|b>).
double fidelity(const ComplexMatrix& rho, const FockVector& b);

double fidelity(const HeraldedState& a, const FockVector& b);

/// Ideal even cat states used as fidelity targets.
class IdealCat {
public:
    /// N (|beta> + |-beta>), N = [2(1 + e^{-2|beta|^2})]^{-1/2}.
    static IdealCat two_component(Complex beta, int n_trunc = kDefaultTrunc);

    /// |b - ib> + |-b + ib> + e^{-i2|b|^2} (|b + ib> + |-b - ib>), normalized.
    static IdealCat four_component(Complex beta, int n_trunc = kDefaultTrunc);

    Complex beta() const { return beta_; }
    int components() const { return components_; }
    const FockVector& state() const { return state_; }
    /// Analytic normalization factor of the two-component cat.
    static double normalization(Complex beta);

private:
    IdealCat(Complex beta, int components, FockVector state)
        : beta_(beta), components_(components), state_(std::move(state)) {}

    Complex beta_;
    int components_;
    FockVector state_;
};

/// Fidelity of the heralded cat with |beta|^2 = n:
/// 2^{2n+1} e^{-n} / (1 + e^{-2n}) [sum_k C(n,k)^2 (2k)! / n^{2k}]^{-1},
/// evaluated in log space. Throws DomainError unless 1 <= n <= 10000.
double cat_fidelity_closed_form(int n);

} // namespace evenparity
