#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "evenparity/detector.hpp"
#include "evenparity/fock.hpp"

namespace evenparity {

/// Free parameters of a preparation run. Unset optionals are filled by
/// resolved(); `stages` selects the two-component (1) or four-component (2)
/// scheme.
struct SchemeConfig {
    Complex beta{0.0, 0.0};
    std::optional<double> lambda;
    std::optional<double> squeezing_db;
    /// Stage-1 outcome (n, n).
    std::optional<int> n;
    double eta = 1.0;
    /// Detector efficiency of the second stage; defaults to eta.
    std::optional<double> eta_stage2;
    int n_trunc = kDefaultTrunc;
    int stages = 1;
    /// Amplitude of the stage-1 coherent control state.
    std::optional<Complex> control_amplitude;
    /// Displacement applied between the stages.
    std::optional<Complex> displacement;
    /// Stage-2 outcome (m, m).
    std::optional<int> second_outcome;
    PovmOptions povm;

    /// Copy with every optional filled in and all invariants checked.
    ///
    /// Defaults, with the stage-1 cat aimed at amplitude beta*lambda in the
    /// two-stage scheme so that the stage-2 output lands on +-beta +- i beta:
    ///   stages = 1: control beta*lambda, n = round(|beta|^2)
    ///   stages = 2: control beta*lambda^2, n = round(|beta lambda|^2),
    ///               displacement i*beta*lambda, second outcome round(2|beta|^2)
    /// Throws DomainError when lambda and dB are both given or neither is.
    SchemeConfig resolved() const;

    double lambda_value() const;
};

/// Output of a heralding run. The state is unnormalized: its squared norm
/// (pure) or trace (mixed) is the success probability.
struct HeraldedState {
    std::variant<FockVector, ComplexMatrix> state;
    double success_probability = 0.0;
    SchemeConfig config;
    /// Per-stage probabilities; their product is success_probability.
    std::vector<double> stage_probabilities;

    bool is_pure() const { return std::holds_alternative<FockVector>(state); }
    int n_trunc() const;
    /// Throws std::bad_variant_access for a mixed state.
    const FockVector& pure() const { return std::get<FockVector>(state); }
    /// |psi><psi| for pure states.
    ComplexMatrix density_matrix() const;
    /// Unit-norm pure state. Throws for mixed states.
    FockVector normalized_pure() const;
    /// Unit-trace density matrix.
    ComplexMatrix normalized_density() const;
    /// Tr(rho^2) of the normalized state.
    double purity() const;
};

/// round(mean) with half-integers going to the lower neighbour.
int default_outcome(double mean);

/// Arm-2 state of sqrt(1-lambda^2) sum_k lambda^k |k,k> after arm 1 is
/// projected on |chi> of the given control and outcome (n, n):
///   <j|psi> = sqrt(1-lambda^2) lambda^j c_{2n-j} conj(A_{j,n}).
/// Returned on the control's truncation.
HeraldedState herald(const FockVector& control, double lambda, int n);

/// herald() with a coherent control of amplitude alpha on 0..n_trunc.
HeraldedState herald_coherent(Complex alpha, double lambda, int n, int n_trunc = kDefaultTrunc);

/// Two-component cat: coherent control alpha = beta*lambda.
HeraldedState cat_herald(Complex beta, double lambda, int n, int n_trunc = kDefaultTrunc);

/// herald() with lossy detectors. rho = sum w psi psi^dag over the POVM
/// components, on 0..n_trunc; a pure state when eta = 1.
HeraldedState herald_lossy(const FockVector& control, double lambda, int n, double eta,
                           int n_trunc = kDefaultTrunc, const PovmOptions& options = {},
                           Diagnostics* diag = nullptr);

/// herald_lossy() for a mixed control state, by eigendecomposition.
HeraldedState herald_lossy(const ComplexMatrix& control, double lambda, int n, double eta,
                           int n_trunc = kDefaultTrunc, const PovmOptions& options = {},
                           Diagnostics* diag = nullptr);

HeraldedState cat_herald_lossy(Complex beta, double lambda, int n, double eta,
                               int n_trunc = kDefaultTrunc, const PovmOptions& options = {},
                               Diagnostics* diag = nullptr);

/// Intermediate states of the two-stage scheme, each normalized:
/// (i) stage-1 control, (ii) stage-1 cat, (iii) displaced cat, (iv) output.
struct PipelineStages {
    ComplexMatrix control;
    ComplexMatrix cat;
    ComplexMatrix displaced;
    ComplexMatrix output;
};

/// Two concatenated even-parity detectors with a displacement in between.
/// Throws TruncationError when the displaced intermediate leaks more than
/// 1e-4 of its norm past n_trunc.
HeraldedState four_component_pipeline(const SchemeConfig& config, Diagnostics* diag = nullptr,
                                      PipelineStages* stages = nullptr);

/// Single- or two-stage preparation according to config.stages.
HeraldedState prepare(const SchemeConfig& config, Diagnostics* diag = nullptr);

double success_probability(const SchemeConfig& config);

} // namespace evenparity
