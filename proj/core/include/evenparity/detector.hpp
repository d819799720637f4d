#pragma once

#include <optional>
#include <vector>

#include "evenparity/fock.hpp"

namespace evenparity {

/// One term w |v><v| of the detector's measurement operator. (x, y) are the
/// photon numbers arriving at the two detectors before loss.
struct DetectorComponent {
    double weight = 1.0;
    FockVector vector;
    int x = 0;
    int y = 0;
};

/// Measurement operator of the even-parity detector for outcome (n, n):
/// Pi = sum_k w_k |v_k><v_k|. With eta = 1 there is a single component, the
/// projected vector |chi> with unit weight.
struct DetectorEffect {
    double eta = 1.0;
    int n = 0;
    FockVector control;
    int cutoff = 0;
    /// Relative weight of the (x, y) terms dropped beyond the cutoff.
    double tail_weight = 0.0;
    std::vector<DetectorComponent> components;

    bool is_ideal() const { return eta == 1.0; }
    /// Largest vector dimension over all components.
    int dimension() const;
    double trace() const;
    /// Dense Pi on 0..dimension()-1.
    ComplexMatrix matrix() const;
};

struct PovmOptions {
    /// Upper bound on x and y. Defaults to n + ceil(10 (1 - eta) n) + 20.
    std::optional<int> cutoff;
    /// Truncation of the component vectors. Defaults to 2 * cutoff.
    std::optional<int> n_trunc;
};

int default_povm_cutoff(int n, double eta);

/// c_m = 1 for m = 0..n_trunc, unnormalized.
FockVector flat_control(int n_trunc);

/// Unnormalized |chi> with <j|chi> = conj(c_{2n-j}) A_{j,n} for j <= 2n, on
/// the control's truncation. Throws DomainError if control.n_trunc() < 2n.
FockVector project_chi(const FockVector& control, int n);

/// pr(n, n) = <chi|rho|chi> for a pure or mixed input and an ideal detector.
double detection_probability(const FockVector& input, const FockVector& control, int n);
double detection_probability(const ComplexMatrix& rho, const FockVector& control, int n);

/// Tr[Pi rho] for a general (possibly lossy) detector.
double detection_probability(const FockVector& input, const DetectorEffect& effect);
double detection_probability(const ComplexMatrix& rho, const DetectorEffect& effect);

/// Loss-degraded detector: each detector is preceded by a beam splitter of
/// transmissivity eta. Components are
///   w(x, y) = C(x,n) C(y,n) eta^{2n} (1-eta)^{x+y-2n},
///   <p|v(x,y)> = (-1)^p conj(c_{x+y-p}) <p, x+y-p|U|x, y>,
/// for n <= x, y <= cutoff; missing control amplitudes count as zero.
/// Warns when the dropped tail weight exceeds 1e-6.
DetectorEffect povm_element(const FockVector& control, int n, double eta,
                            const PovmOptions& options = {}, Diagnostics* diag = nullptr);

/// pr(j) = <j|Pi|j>.
std::vector<double> povm_diagonal(const DetectorEffect& effect);

/// <chi|Pi|chi> / (<chi|chi> Tr Pi); exactly 1 for an ideal detector probed
/// with its own |chi>. Throws DomainError if Tr Pi = 0 or chi = 0.
double projector_fidelity(const DetectorEffect& effect, const FockVector& chi);

} // namespace evenparity
