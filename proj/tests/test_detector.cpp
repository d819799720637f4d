#include "doctest.h"

#include <cmath>
#include <random>

#include "evenparity/beam_splitter.hpp"
#include "evenparity/detector.hpp"
#include "oracles/oracles.hpp"

using namespace evenparity;

namespace {

FockVector random_state(std::mt19937_64& rng, int n_trunc)
{
    std::normal_distribution<double> g;
    ComplexVector a(n_trunc + 1);
    for (int j = 0; j <= n_trunc; ++j) a[j] = {g(rng), g(rng)};
    return FockVector(a).normalized();
}

// |chi> = <phi|U^dag|n,n> from the dense beam splitter.
FockVector dense_chi(const FockVector& control, int n, int dmax)
{
    const Eigen::MatrixXcd u = oracle::dense_beam_splitter(dmax);
    ComplexVector chi = ComplexVector::Zero(dmax + 1);
    for (int j = 0; j <= dmax; ++j)
        for (int m = 0; m <= dmax && m < control.dimension(); ++m)
            chi[j] += std::conj(control[m]) * std::conj(u(oracle::pair_index(n, n, dmax), oracle::pair_index(j, m, dmax)));
    return FockVector(chi);
}

} // namespace

TEST_CASE("projected vector for Fock controls")
{
    const FockVector vac = FockVector::number_state(0, 4);
    const FockVector chi = project_chi(vac, 1);
    CHECK(std::abs(chi[2] - Complex{0.0, 1.0 / std::sqrt(2.0)}) < 1e-15);
    CHECK(chi[0] == Complex{0.0, 0.0});
    CHECK(chi.squared_norm() == doctest::Approx(0.5).epsilon(1e-15));

    const FockVector two = FockVector::number_state(2, 4);
    const FockVector chi2 = project_chi(two, 1);
    CHECK(std::abs(chi2[0] - Complex{0.0, 1.0 / std::sqrt(2.0)}) < 1e-15);
    CHECK(chi2.squared_norm() == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(project_chi(FockVector::number_state(0, 3), 2), DomainError);
}

TEST_CASE("projected vector matches the dense beam splitter up to the (-1)^n global phase")
{
    std::mt19937_64 rng(7);
    for (int n = 0; n <= 3; ++n) {
        const FockVector control = random_state(rng, 2 * n);
        const FockVector chi = project_chi(control, n);
        const FockVector ref = dense_chi(control, n, 2 * n);
        for (int j = 0; j <= 2 * n; ++j) CHECK(std::abs(chi[j] - sign_pow(n) * ref[j]) < 1e-12);
    }
}

TEST_CASE("flat control reproduces the Holland-Burnett profile")
{
    const FockVector chi = project_chi(flat_control(40), 20);
    for (int j = 0; j <= 40; ++j) CHECK(std::norm(chi[j]) == doctest::Approx(std::norm(hb_coefficient(j, 20))).epsilon(1e-14));
}

TEST_CASE("ideal detection probabilities")
{
    const FockVector ctrl = coherent_state(1.3, 30);
    for (int n = 0; n <= 5; ++n) {
        for (int odd = 1; odd <= 9; odd += 2) CHECK(detection_probability(FockVector::number_state(odd, 30), ctrl, n) == 0.0);
    }
    const FockVector one = FockVector::number_state(1, 4);
    CHECK(detection_probability(one, one, 1) == doctest::Approx(0.0));

    SUBCASE("coherent inputs against the 40-photon sector block")
    {
        const double amp = std::sqrt(20.0);
        const FockVector coh = coherent_state(amp, 60);
        const double pr = detection_probability(coh, coh, 20);
        const Eigen::MatrixXcd block = oracle::sector_block_expm(40);
        Complex amp_out{0.0, 0.0};
        for (int p = 0; p <= 40; ++p) amp_out += block(20, p) * coh[p] * coh[40 - p];
        CHECK(pr == doctest::Approx(std::norm(amp_out)).epsilon(1e-10));
    }
    SUBCASE("pure and density-matrix inputs agree")
    {
        std::mt19937_64 rng(3);
        const FockVector psi = random_state(rng, 12);
        const FockVector c = random_state(rng, 12);
        CHECK(detection_probability(outer_product(psi), c, 4) == doctest::Approx(detection_probability(psi, c, 4)).epsilon(1e-12));
    }
}

TEST_CASE("detection probability is independent of the output-port phase convention")
{
    const BeamSplitterConvention other{0.7, -1.3};
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        const FockVector psi = random_state(rng, 2 * n);
        const FockVector c = random_state(rng, 2 * n);
        const ComplexMatrix block = bs_sector_block(2 * n, other);
        Complex a{0.0, 0.0};
        for (int p = 0; p <= 2 * n; ++p) a += block(n, p) * psi[p] * c[2 * n - p];
        CHECK(detection_probability(psi, c, n) == doctest::Approx(std::norm(a)).epsilon(1e-12));
    }
}

TEST_CASE("lossy detection matches a dense Kraus-channel simulation")
{
    std::mt19937_64 rng(2024);
    for (double eta : {1.0, 0.8, 0.5}) {
        for (int n = 0; n <= 3; ++n) {
            const FockVector control = random_state(rng, 3);
            const FockVector a = random_state(rng, 3);
            const FockVector b = random_state(rng, 3);
            const ComplexMatrix rho = 0.6 * outer_product(a) + 0.4 * outer_product(b);
            const DetectorEffect effect = povm_element(control, n, eta);
            const double pr = detection_probability(rho, effect);
            const double ref = oracle::brute_force_detection_probability(rho, control.amplitudes(), n, eta, 6);
            CHECK(std::abs(pr - ref) < 1e-9);
        }
    }
}

TEST_CASE("POVM at unit efficiency is the ideal projector")
{
    const FockVector control = coherent_state(Complex{1.0, 0.5}, 30);
    const DetectorEffect effect = povm_element(control, 7, 1.0);
    REQUIRE(effect.components.size() == 1);
    CHECK(effect.is_ideal());
    const FockVector chi = project_chi(control, 7);
    CHECK((effect.matrix() - outer_product(chi)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(effect.components[0].weight == 1.0);
}

TEST_CASE("POVM diagonal and parity")
{
    SUBCASE("ideal detector has no odd weight")
    {
        for (int n = 0; n <= 30; n += 3) {
            const auto pr = povm_diagonal(povm_element(coherent_state(2.1, 80), n, 1.0));
            for (std::size_t j = 1; j < pr.size(); j += 2) CHECK(pr[j] == 0.0);
        }
        const auto pr0 = povm_diagonal(povm_element(flat_control(10), 0, 1.0));
        CHECK(pr0[0] == doctest::Approx(1.0));
        for (std::size_t j = 1; j < pr0.size(); ++j) CHECK(pr0[j] == 0.0);
    }
    SUBCASE("loss populates odd photon numbers")
    {
        const int n = 20;
        const double eta = 0.9;
        const auto pr = povm_diagonal(povm_element(flat_control(2 * default_povm_cutoff(n, eta)), n, eta));
        double odd = 0.0;
        for (std::size_t j = 1; j < pr.size(); j += 2) odd += pr[j];
        CHECK(odd > 0.0);
    }
    SUBCASE("positivity")
    {
        const int n = 10;
        const double eta = 0.85;
        const DetectorEffect e = povm_element(flat_control(2 * default_povm_cutoff(n, eta)), n, eta);
        for (const auto& c : e.components) CHECK(c.weight >= 0.0);
        for (double v : povm_diagonal(e)) {
            CHECK(std::isfinite(v));
            CHECK(v >= 0.0);
        }
    }
}

TEST_CASE("POVM weights follow independent Bernoulli loss")
{
    const int n = 3;
    const double eta = 0.8;
    const DetectorEffect e = povm_element(flat_control(8), n, eta);
    const DetectorComponent* comp = nullptr;
    for (const auto& c : e.components)
        if (c.x == n + 1 && c.y == n) comp = &c;
    REQUIRE(comp != nullptr);
    CHECK(comp->weight == doctest::Approx(4.0 * std::pow(eta, 2 * n) * (1.0 - eta)).epsilon(1e-13));
    const oracle::LossSample mc = oracle::monte_carlo_loss_weight(n + 1, n, n, eta, 1000000, 99);
    CHECK(std::abs(mc.estimate - comp->weight) < 3.0 * mc.std_error);
}

TEST_CASE("POVM tail weight")
{
    const int n = 5;
    const double eta = 0.7;
    CHECK(default_povm_cutoff(n, eta) == 5 + 15 + 20);
    Diagnostics diag;
    const DetectorEffect tight = povm_element(flat_control(20), n, eta, PovmOptions{8, {}}, &diag);
    CHECK(tight.tail_weight > 1e-6);
    CHECK_FALSE(diag.empty());
    Diagnostics quiet;
    const DetectorEffect full = povm_element(flat_control(20), n, eta, {}, &quiet);
    CHECK(full.tail_weight < 1e-6);
    CHECK(quiet.empty());
    CHECK_THROWS_AS(povm_element(flat_control(20), n, 0.0), DomainError);
    CHECK_THROWS_AS(povm_element(flat_control(20), n, 1.2), DomainError);
}

TEST_CASE("projector fidelity")
{
    auto fid = [](int n, double eta) {
        const FockVector ctrl = flat_control(2 * default_povm_cutoff(n, eta));
        return projector_fidelity(povm_element(ctrl, n, eta), project_chi(ctrl, n));
    };
    for (int n : {0, 3, 12}) CHECK(fid(n, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fid(5, 0.99) > 0.9);
    CHECK(fid(5, 0.9) >= fid(10, 0.9));
    CHECK(fid(10, 0.9) >= fid(20, 0.9));
    double prev = 1.0;
    for (double eta : {0.95, 0.9, 0.85}) {
        const double f = fid(10, eta);
        CHECK(f <= prev);
        prev = f;
    }
    CHECK_THROWS_AS(projector_fidelity(povm_element(flat_control(4), 1, 1.0), FockVector(4)), DomainError);
}
