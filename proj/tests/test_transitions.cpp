#include <doctest.h>

#include <cmath>

#include "ftls/errors.hpp"
#include "ftls/transitions.hpp"
#include "ftls/verify.hpp"

using namespace ftls;

namespace {

const TransitionOperator& find(const std::vector<TransitionOperator>& ops, int q, int k) {
    for (const auto& o : ops) {
        if (o.q == q && o.bohr == k) {
            return o;
        }
    }
    throw std::runtime_error("missing component");
}

} // namespace

TEST_SUITE("transitions") {

TEST_CASE("component counts and frequencies") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto s1 = sigma1_transition_ops(p);
    const auto s3 = sigma3_transition_ops(p);
    CHECK(s1.size() == 6);
    CHECK(s3.size() == 3);
    for (const auto& o : s1) {
        CHECK(std::abs(o.q) == 1);
        CHECK(o.omega_bar == doctest::Approx(o.bohr * p.OmegaR));
        CHECK(o.channel == Channel::Sigma1);
    }
    for (const auto& o : s3) {
        CHECK(o.q == 0);
    }
    CHECK(find(s1, 1, 1).combined_frequency(p.Omega) == doctest::Approx(p.Omega + p.OmegaR));
}

TEST_CASE("σ¹ components on resonance") {
    // Δ = 0: φ₁ = (1,1)/√2, φ₂ = (-1,1)/√2. σ⁻ in this basis has all entries ±½.
    const auto p = make_params(1.0, 1.0, 0.1);
    const auto ops = sigma1_transition_ops(p);
    const auto& c0 = find(ops, 1, 0).matrix;
    CHECK(std::abs(c0(0, 0) - 0.5) < 1e-14);
    CHECK(std::abs(c0(1, 1) + 0.5) < 1e-14);
    CHECK(std::abs(c0(0, 1)) < 1e-14);
    const auto& cp = find(ops, 1, 1).matrix;
    const auto& cm = find(ops, 1, -1).matrix;
    CHECK(std::abs(cp(0, 0)) + std::abs(cp(1, 1)) + std::abs(cm(0, 0)) + std::abs(cm(1, 1)) < 1e-14);
    CHECK(std::abs(cp(1, 0)) == doctest::Approx(0.5));
    CHECK(std::abs(cm(0, 1)) == doctest::Approx(0.5));
}

TEST_CASE("ladder relations [H̄_d, S(ω̄)] = -ω̄ S(ω̄)") {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const double om = rng.uniform(0.5, 3.0);
        const auto p = make_params(om + rng.uniform(-0.2, 0.2), om, rng.uniform(0.01, 0.2));
        const auto h = mean_hamiltonian_dressed(p);
        for (auto c : {Channel::Sigma1, Channel::Sigma3}) {
            for (const auto& o : transition_ops(p, c)) {
                CHECK(distance(commutator(h, o.matrix), cplx(-o.omega_bar) * o.matrix) < 1e-12);
            }
        }
    }
}

TEST_CASE("q = -1 components are adjoints of q = 1") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto ops = sigma1_transition_ops(p);
    for (int k : {-1, 0, 1}) {
        CHECK(distance(find(ops, -1, -k).matrix, find(ops, 1, k).matrix.adjoint()) < 1e-15);
    }
}

TEST_CASE("Fourier reconstruction equals the Heisenberg-picture coupling") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto b = dressed_basis(p);
    for (auto c : {Channel::Sigma1, Channel::Sigma3}) {
        const auto s = b.to_dressed(coupling_operator(c));
        const auto ops = transition_ops(p, c);
        for (double t : {0.0, 0.7, 3.1, 17.4, 101.0}) {
            CHECK(distance(fourier_reconstruct(ops, p.Omega, t), heisenberg_coupling(p, s, t)) < 1e-12);
        }
    }
}

TEST_CASE("numeric decomposition recovers the closed form") {
    const auto p = make_params(1.02, 1.0, 0.05);
    const auto b = dressed_basis(p);
    const auto r = numeric_decomposition_oracle(p, b.to_dressed(sigma1()), 64, 16);
    CHECK_FALSE(r.aliasing_warning);
    const auto closed = sigma1_transition_ops(p);
    CHECK(r.ops.size() == closed.size());
    for (const auto& o : closed) {
        CHECK(distance(find(r.ops, o.q, o.bohr).matrix, o.matrix) < 1e-7);
    }
}

TEST_CASE("frequency collision check") {
    const auto p = make_params(0.86, 0.85, 0.075);
    CHECK_NOTHROW(check_frequency_collisions(sigma1_transition_ops(p), p.Omega));
    // Ω_R = Ω: (q=1, k=-1) and (q=-1, k=1) both oscillate at zero frequency.
    const auto edge = make_params(1.0, 1.0, 0.5);
    CHECK_THROWS_AS(check_frequency_collisions(sigma1_transition_ops(edge), edge.Omega), DegeneracyError);
}

} // TEST_SUITE
