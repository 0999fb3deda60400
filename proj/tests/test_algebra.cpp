#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ftls/algebra.hpp"
#include "ftls/errors.hpp"
#include "ftls/floquet.hpp"
#include "ftls/verify.hpp"
#include "test_util.hpp"

using namespace ftls;
using testutil::mat;

TEST_SUITE("algebra") {

TEST_CASE("pauli_decompose of basis elements and the reference mean Hamiltonian") {
    auto c = pauli_decompose(Operator2::identity());
    CHECK(std::abs(c.c0 - 1.0) == 0.0);
    CHECK(std::abs(c.c1) + std::abs(c.c2) + std::abs(c.c3) == 0.0);

    c = pauli_decompose(sigma3());
    CHECK(std::abs(c.c3 - 1.0) == 0.0);
    CHECK(std::abs(c.c0) + std::abs(c.c1) + std::abs(c.c2) == 0.0);

    const auto p = make_params(0.86, 0.85, 0.075);
    c = pauli_decompose(mean_hamiltonian(p));
    CHECK(std::abs(c.c0) < 1e-15);
    CHECK(std::abs(c.c1 - 0.075) < 1e-15);
    CHECK(std::abs(c.c2) < 1e-15);
    CHECK(std::abs(c.c3 - 0.005) < 1e-15);
}

TEST_CASE("pauli reconstruct inverts decompose") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const auto m = mat({rng.uniform(), rng.uniform()}, {rng.uniform(), -rng.uniform()},
                           {rng.uniform(), 0.3}, {-rng.uniform(), rng.uniform()});
        CHECK(distance(pauli_reconstruct(pauli_decompose(m)), m) < 1e-14);
    }
}

TEST_CASE("expm_hermitian: 2π spin rotation, identity at t = 0, group law") {
    const auto half_s3 = cplx(0.5) * sigma3();
    CHECK(distance(expm_hermitian(half_s3, 2.0 * std::numbers::pi), cplx(-1.0) * Operator2::identity()) < 1e-13);
    const auto h = mat(0.3, {0.1, -0.2}, {0.1, 0.2}, -0.7);
    CHECK(distance(expm_hermitian(h, 0.0), Operator2::identity()) == 0.0);
    const auto u = expm_hermitian(h, 1.7);
    CHECK(distance(u.adjoint() * u, Operator2::identity()) < 1e-13);
    CHECK(distance(expm_hermitian(h, 0.4) * expm_hermitian(h, 1.3), u) < 1e-12);
}

TEST_CASE("expm_hermitian of the mean Hamiltonian matches the time-ordered oracle") {
    // U(τ) = -exp(-iH̄τ): the rotating frame contributes exp(-iπσ³) = -I.
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto e = expm_hermitian(mean_hamiltonian(p), p.tau);
    CHECK(distance(e, cplx(-1.0) * propagator_oracle(p, p.tau, 100000)) < 1e-10);
}

TEST_CASE("expm_hermitian rejects non-Hermitian input") {
    CHECK_THROWS_AS(expm_hermitian(sigma_plus(), 1.0), InvalidArgument);
}

TEST_CASE("vectorize uses column stacking") {
    const Vec4 v = vectorize(cplx(0.5) * Operator2::identity());
    CHECK(v(0) == cplx(0.5));
    CHECK(v(1) == cplx(0.0));
    CHECK(v(2) == cplx(0.0));
    CHECK(v(3) == cplx(0.5));

    const auto proj = mat(1, 0, 0, 0, Basis::Dressed);
    const Vec4 w = vectorize(proj);
    CHECK(w(0) == cplx(1.0));
    CHECK(w.tail<3>().norm() == 0.0);

    const auto m = mat(1, 2, 3, 4);
    CHECK(vectorize(m)(1) == cplx(3.0)); // ρ₁₀ second

    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto r = mat({rng.uniform(), rng.uniform()}, rng.uniform(), {0, rng.uniform()}, rng.uniform());
        CHECK(devectorize(vectorize(r)).matrix() == r.matrix());
    }
}

TEST_CASE("lindblad_superop: zero rate, amplitude damping, trace annihilation") {
    CHECK(lindblad_superop(sigma_minus(), 0.0).matrix().norm() == 0.0);

    const double gamma = 0.37;
    const auto l = lindblad_superop(sigma_minus(), gamma);
    const auto excited = mat(1, 0, 0, 0);
    const auto expect = cplx(gamma) * (mat(0, 0, 0, 1) - excited);
    CHECK(distance(l.apply(excited), expect) < 1e-15);

    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto s = mat({rng.uniform(), rng.uniform()}, rng.uniform(), {rng.uniform(), -0.2}, rng.uniform());
        const auto rho = mat(rng.uniform(), {rng.uniform(), 0.1}, {rng.uniform(), -0.1}, rng.uniform());
        const auto h = cplx(0.5) * (rho + rho.adjoint());
        const auto out = lindblad_superop(s, 1.3).apply(h);
        CHECK(std::abs(out.trace()) < 1e-13);
        CHECK(distance(out, out.adjoint()) < 1e-12);
    }
}

TEST_CASE("lindblad_superop rejects a negative rate") {
    CHECK_THROWS_AS(lindblad_superop(sigma_minus(), -1e-3), InvalidArgument);
}

TEST_CASE("basis tags are enforced") {
    const auto a = Operator2::identity(Basis::Lab);
    const auto b = Operator2::identity(Basis::Dressed);
    CHECK_THROWS_AS(a + b, BasisMismatch);
    CHECK_THROWS_AS(a * b, BasisMismatch);
    CHECK_THROWS_AS(lindblad_superop(sigma_minus(), 1.0).apply(b), BasisMismatch);
}

TEST_CASE("superop_exp of a commutator generator equals unitary conjugation") {
    const auto h = mat(0.2, {0.3, 0.1}, {0.3, -0.1}, -0.4);
    const auto rho = mat(0.6, {0.1, 0.2}, {0.1, -0.2}, 0.4);
    const double t = 2.3;
    const auto u = expm_hermitian(h, t);
    CHECK(distance(superop_exp(hamiltonian_superop(h), t).apply(rho), u * rho * u.adjoint()) < 1e-12);
}

TEST_CASE("von Neumann entropy and logarithm") {
    CHECK(von_neumann_entropy(cplx(0.5) * Operator2::identity()) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(von_neumann_entropy(mat(1, 0, 0, 0)) < 1e-12);
    const auto rho = mat(0.7, 0.1, 0.1, 0.3);
    const auto e = hermitian_eigen(rho);
    const auto l = log_hermitian(rho);
    for (int k = 0; k < 2; ++k) {
        const Eigen::Vector2cd v = e.vectors.col(k);
        CHECK(std::abs((l.matrix() * v - std::log(e.values[k]) * v).norm()) < 1e-13);
    }
}

} // TEST_SUITE
