#include "doctest.h"

#include <cmath>
#include <numbers>

#include "evenparity/fock.hpp"
#include "oracles/oracles.hpp"

using namespace evenparity;

TEST_CASE("coherent state of zero amplitude is the vacuum")
{
    const FockVector v = coherent_state(0.0, 10);
    CHECK(v[0] == Complex{1.0, 0.0});
    for (int j = 1; j <= 10; ++j) CHECK(v[j] == Complex{0.0, 0.0});
}

TEST_CASE("coherent state normalization and Poisson statistics")
{
    const Complex beta{std::sqrt(20.0), 0.0};
    Diagnostics diag;
    const FockVector v = coherent_state(beta, 100, &diag);
    CHECK(diag.empty());
    CHECK(std::abs(v.squared_norm() - 1.0) < 1e-10);

    int argmax = 0;
    for (int j = 0; j <= 100; ++j) {
        const double expected = oracle::poisson_pmf(j, 20.0);
        CHECK(std::norm(v[j]) == doctest::Approx(expected).epsilon(1e-12));
        if (std::norm(v[j]) > std::norm(v[argmax])) argmax = j;
    }
    CHECK((argmax == 20 || argmax == 19));
}

TEST_CASE("coherent state phase follows beta^j")
{
    const Complex beta = std::polar(1.3, 0.7);
    const FockVector v = coherent_state(beta, 12);
    for (int j = 1; j <= 12; ++j) {
        CHECK(std::arg(v[j] / v[0]) == doctest::Approx(std::remainder(0.7 * j, 2 * std::numbers::pi)).epsilon(1e-12));
    }
}

TEST_CASE("coherent state warns when the truncation is too small")
{
    Diagnostics diag;
    coherent_state(5.0, 20, &diag);
    REQUIRE_FALSE(diag.empty());
    CHECK(diag.warnings().front().captured_norm < 1.0 - 1e-6);
}

TEST_CASE("two-mode squeezed vacuum")
{
    SUBCASE("lambda = 0 is vacuum on both modes")
    {
        const TwoModeState s = two_mode_squeezed_vacuum(0.0, 5);
        CHECK(s.amplitude(0, 0) == Complex{1.0, 0.0});
        CHECK(s.squared_norm() == doctest::Approx(1.0));
    }
    SUBCASE("diagonal with geometric amplitudes")
    {
        const TwoModeState s = two_mode_squeezed_vacuum(0.5, 60);
        CHECK(s.is_diagonal());
        CHECK(std::abs(s.squared_norm() - 1.0) < 1e-12);
        CHECK(s.amplitude(3, 3).real() == doctest::Approx(std::sqrt(0.75) * 0.125));
    }
    SUBCASE("mean photon number matches the geometric-series sum")
    {
        const double l = 0.82;
        const TwoModeState s = two_mode_squeezed_vacuum(l, 100);
        const double analytic = l * l / (1.0 - l * l);
        CHECK(std::abs(s.mean_photon_number() - analytic) < 1e-9);
        CHECK(analytic == doctest::Approx(2.055).epsilon(2e-3));
    }
    SUBCASE("domain and truncation")
    {
        CHECK_THROWS_AS(two_mode_squeezed_vacuum(1.0, 10), DomainError);
        CHECK_THROWS_AS(two_mode_squeezed_vacuum(-0.1, 10), DomainError);
        Diagnostics diag;
        two_mode_squeezed_vacuum(0.99, 10, &diag);
        CHECK_FALSE(diag.empty());
    }
}

TEST_CASE("squeezing dB conversion")
{
    CHECK(squeezing_db_to_lambda(0.0) == 0.0);
    CHECK(squeezing_db_to_lambda(10.0) == doctest::Approx(0.8182).epsilon(1e-4));
    CHECK(std::abs(squeezing_db_to_lambda(10.0) - 0.82) < 0.005);
    CHECK(squeezing_db_to_lambda(13.0) == doctest::Approx(0.9045465579315922).epsilon(1e-13));
    CHECK(std::abs(squeezing_db_to_lambda(13.0) - 0.9049) < 1e-3);
    for (double db : {0.5, 3.0, 7.5, 15.0, 20.0}) {
        CHECK(lambda_to_squeezing_db(squeezing_db_to_lambda(db)) == doctest::Approx(db).epsilon(1e-12));
    }
    CHECK_THROWS_AS(squeezing_db_to_lambda(-1.0), DomainError);
}

TEST_CASE("displacement operator")
{
    SUBCASE("zero displacement is the identity")
    {
        const ComplexMatrix d = displacement_matrix(0.0, 8);
        CHECK((d - ComplexMatrix::Identity(9, 9)).norm() == 0.0);
    }
    SUBCASE("D(alpha)|0> equals the coherent state")
    {
        const Complex alpha{1.0, 2.0};
        const ComplexMatrix d = displacement_matrix(alpha, 100);
        const FockVector coh = coherent_state(alpha, 100);
        CHECK((d.col(0) - coh.amplitudes()).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("D(alpha) D(-alpha) is the identity on the lower half")
    {
        const int n = 100;
        for (Complex alpha : {Complex{1.0, 2.0}, Complex{2.0, -1.0}}) {
            const ComplexMatrix prod = displacement_matrix(alpha, n) * displacement_matrix(-alpha, n);
            const ComplexMatrix block = prod.topLeftCorner(n / 2, n / 2);
            CHECK((block - ComplexMatrix::Identity(n / 2, n / 2)).cwiseAbs().maxCoeff() < 1e-8);
        }
        // For |alpha|^2 = 10 the truncated product stays exact on the first 37
        // columns only (limit taken from a matrix exponential on 300 levels).
        const Complex alpha{0.0, std::sqrt(10.0)};
        const ComplexMatrix prod = displacement_matrix(alpha, n) * displacement_matrix(-alpha, n);
        CHECK((prod.topLeftCorner(37, 37) - ComplexMatrix::Identity(37, 37)).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((prod.topLeftCorner(50, 50) - ComplexMatrix::Identity(50, 50)).cwiseAbs().maxCoeff() > 1e-2);
    }
    SUBCASE("columns below n_trunc/2 are unit vectors")
    {
        for (Complex alpha : {Complex{2.0, -1.0}, Complex{1.0, 2.0}, Complex{-1.5, -1.5}}) {
            const ComplexMatrix d = displacement_matrix(alpha, 100);
            for (int c = 0; c < 50; ++c) CHECK(std::abs(d.col(c).norm() - 1.0) < 1e-8);
        }
    }
    SUBCASE("matches a matrix exponential on an enlarged basis")
    {
        const Complex alpha{1.5, -0.5};
        const ComplexMatrix d = displacement_matrix(alpha, 40);
        const Eigen::MatrixXcd ref = oracle::displacement_expm(alpha, 40, 60);
        CHECK((d.topLeftCorner(30, 30) - ref.topLeftCorner(30, 30)).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("large displacement warns")
    {
        Diagnostics diag;
        displacement_matrix(Complex{4.0, 0.0}, 40, &diag);
        CHECK_FALSE(diag.empty());
    }
}

TEST_CASE("vector helpers")
{
    const FockVector a(ComplexVector::Ones(3));
    const FockVector b = FockVector::number_state(1, 6);
    CHECK(inner_product(a, b) == Complex{1.0, 0.0});
    CHECK(a.resized(6).squared_norm() == doctest::Approx(3.0));
    CHECK(a.resized(1).squared_norm() == doctest::Approx(2.0));
    CHECK(a.normalized().is_normalized());
    CHECK_THROWS_AS(FockVector(4).normalized(), DomainError);

    const FockVector r = phase_rotate(b, std::numbers::pi / 2);
    CHECK(std::abs(r[1] - Complex{0.0, 1.0}) < 1e-15);
    CHECK(FockVector::number_state(4, 10).support_bound() == 4);
}
