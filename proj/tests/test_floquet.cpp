#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ftls/errors.hpp"
#include "ftls/floquet.hpp"
#include "ftls/verify.hpp"
#include "test_util.hpp"

using namespace ftls;

TEST_SUITE("floquet") {

TEST_CASE("make_params derives Δ, Ω_R and τ") {
    const auto p = make_params(0.86, 0.85, 0.075);
    CHECK(p.Delta == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(p.OmegaR == doctest::Approx(0.15033296378372907).epsilon(1e-15));
    CHECK(p.tau == doctest::Approx(2.0 * std::numbers::pi / 0.85).epsilon(1e-15));
}

TEST_CASE("make_params rejects invalid drives") {
    CHECK_THROWS_AS(make_params(1.0, 0.0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(make_params(1.0, -1.0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(make_params(1.0, 1.0, -0.1), InvalidArgument);
    CHECK_THROWS_AS(make_params(1.0, 0.2, 0.5), InvalidArgument); // Ω_R > Ω
}

TEST_CASE("quasienergies at the reference drive") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto b = dressed_basis(p);
    CHECK(b.eps1 == doctest::Approx(-0.349833).epsilon(1e-5));
    CHECK(b.eps2 == doctest::Approx(-0.500167).epsilon(1e-5));
    CHECK(b.eps1 - b.eps2 == doctest::Approx(p.OmegaR).epsilon(1e-14));
}

TEST_CASE("dressed basis on resonance") {
    const auto p = make_params(1.0, 1.0, 0.1);
    const auto b = dressed_basis(p);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(b.phi1(0) - s) < 1e-15);
    CHECK(std::abs(b.phi1(1) - s) < 1e-15);
    CHECK(std::abs(b.phi2(0) + s) < 1e-15);
    CHECK(std::abs(b.phi2(1) - s) < 1e-15);
}

TEST_CASE("dressed basis diagonalizes H̄ with eigenvalues ±½Ω_R") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const double om = rng.uniform(0.5, 3.0);
        const auto p = make_params(om + rng.uniform(-0.1, 0.1), om, rng.uniform(0.0, 0.2));
        const auto b = dressed_basis(p);
        const auto hd = b.to_dressed(mean_hamiltonian(p));
        CHECK(distance(hd, mean_hamiltonian_dressed(p)) < 1e-12);
        CHECK((b.change_of_basis().adjoint() * b.change_of_basis() - Mat2::Identity()).norm() < 1e-14);
    }
}

TEST_CASE("dressed basis is undefined for g = Δ = 0") {
    CHECK_THROWS_AS(dressed_basis(make_params(1.0, 1.0, 0.0)), DegeneracyError);
}

TEST_CASE("propagator: identity at zero, unitary, matches RK4 oracle") {
    const auto p = make_params(0.86, 0.85, 0.075);
    CHECK(distance(propagator(p, 0.0), Operator2::identity()) < 1e-15);
    for (double t : {0.3, 1.7, 5.0, 12.0}) {
        const auto u = propagator(p, t);
        CHECK(distance(u.adjoint() * u, Operator2::identity()) < 1e-13);
        CHECK(distance(u, propagator_oracle(p, t, 20000)) < 1e-9);
    }
}

TEST_CASE("U(t + τ) = U(t) U(τ) and U(τ) = -exp(-iH̄τ)") {
    const auto p = make_params(1.3, 1.2, 0.2);
    const auto ut = propagator(p, p.tau);
    CHECK(distance(ut, cplx(-1.0) * expm_hermitian(mean_hamiltonian(p), p.tau)) < 1e-13);
    for (double t : {0.1, 0.9, 3.3}) {
        CHECK(distance(propagator(p, t + p.tau), propagator(p, t) * ut) < 1e-12);
    }
}

TEST_CASE("Schrödinger equation holds for the closed-form propagator") {
    const auto p = make_params(0.9, 1.0, 0.15);
    const double t = 2.1;
    const double h = 1e-5;
    const auto du = cplx(1.0 / (2 * h)) * (propagator(p, t + h) - propagator(p, t - h));
    const auto rhs = cplx(0.0, -1.0) * lab_hamiltonian(p, t) * propagator(p, t);
    CHECK(distance(du, rhs) < 1e-8);
}

TEST_CASE("propagator_dressed is the basis change of the lab propagator") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto b = dressed_basis(p);
    const auto ud = propagator_dressed(p, b, 2.5);
    CHECK(distance(b.to_lab(ud), propagator(p, 2.5)) < 1e-14);
    CHECK_THROWS_AS(b.to_lab(propagator(p, 1.0)), BasisMismatch);
}

} // TEST_SUITE
