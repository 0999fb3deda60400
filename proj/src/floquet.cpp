// floquet.cpp — Driven two-level system: parameters, exact propagator, dressed basis

#include "ftls/floquet.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ftls/errors.hpp"

namespace ftls {

namespace {
constexpr cplx I{0.0, 1.0};
}

SystemParams make_params(double omega0, double Omega, double g) {
    if (!(Omega > 0.0) || !std::isfinite(Omega)) {
        throw InvalidArgument("drive frequency Omega must be positive, got " + std::to_string(Omega));
    }
    if (!(g >= 0.0) || !std::isfinite(g) || !std::isfinite(omega0)) {
        throw InvalidArgument("coupling g must be finite and non-negative, got " + std::to_string(g));
    }
    SystemParams p;
    p.omega0 = omega0;
    p.Omega = Omega;
    p.g = g;
    p.Delta = omega0 - Omega;
    p.OmegaR = std::sqrt(4.0 * g * g + p.Delta * p.Delta);
    p.tau = 2.0 * std::numbers::pi / Omega;
    if (p.OmegaR > Omega) {
        throw InvalidArgument("Rabi frequency Omega_R = " + std::to_string(p.OmegaR) +
                              " exceeds the drive frequency Omega = " + std::to_string(Omega) +
                              "; the model assumes Omega_R <= Omega");
    }
    return p;
}

Operator2 lab_hamiltonian(const SystemParams& p, double t) {
    const cplx e = std::exp(-I * p.Omega * t);
    return 0.5 * p.omega0 * sigma3() + p.g * (std::conj(e) * sigma_minus() + e * sigma_plus());
}

Operator2 mean_hamiltonian(const SystemParams& p) {
    return 0.5 * p.Delta * sigma3() + p.g * sigma1();
}

Operator2 propagator(const SystemParams& p, double t) {
    Mat2 u1 = Mat2::Zero();
    u1(0, 0) = std::exp(-0.5 * I * p.Omega * t);
    u1(1, 1) = std::exp(0.5 * I * p.Omega * t);
    return Operator2(u1) * expm_hermitian(mean_hamiltonian(p), t);
}

Mat2 DressedBasis::change_of_basis() const {
    Mat2 v;
    v.col(0) = phi1;
    v.col(1) = phi2;
    return v;
}

Operator2 DressedBasis::to_dressed(const Operator2& lab) const {
    require_same_basis(lab.basis(), Basis::Lab, "to_dressed");
    const Mat2 v = change_of_basis();
    return Operator2(v.adjoint() * lab.matrix() * v, Basis::Dressed);
}

Operator2 DressedBasis::to_lab(const Operator2& dressed) const {
    require_same_basis(dressed.basis(), Basis::Dressed, "to_lab");
    const Mat2 v = change_of_basis();
    return Operator2(v * dressed.matrix() * v.adjoint(), Basis::Lab);
}

DressedBasis dressed_basis(const SystemParams& p) {
    if (p.g == 0.0 && p.Delta == 0.0) {
        throw DegeneracyError("dressed basis undefined: g = Delta = 0 makes the averaged Hamiltonian vanish");
    }
    const double d = p.Delta, r = p.OmegaR, g2 = 2.0 * p.g;
    // (Δ+Ω_R, 2g) and (2g, Ω_R-Δ) are positive multiples of each other for g > 0;
    // pick whichever has no cancellation so the g → 0 limits stay finite.
    Eigen::Vector2d v1 = d >= 0.0 ? Eigen::Vector2d(d + r, g2) : Eigen::Vector2d(g2, r - d);
    Eigen::Vector2d v2 = d >= 0.0 ? Eigen::Vector2d(-g2, d + r) : Eigen::Vector2d(d - r, g2);
    DressedBasis b;
    b.eps1 = -0.5 * (p.Omega - r);
    b.eps2 = -0.5 * (p.Omega + r);
    b.phi1 = v1.normalized().cast<cplx>();
    b.phi2 = v2.normalized().cast<cplx>();
    return b;
}

Operator2 mean_hamiltonian_dressed(const SystemParams& p) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = 0.5 * p.OmegaR;
    m(1, 1) = -0.5 * p.OmegaR;
    return Operator2(m, Basis::Dressed);
}

Operator2 propagator_dressed(const SystemParams& p, const DressedBasis& basis, double t) {
    return basis.to_dressed(propagator(p, t));
}

Operator2 propagator_oracle(const SystemParams& p, double t, int steps) {
    if (steps < 1) {
        throw InvalidArgument("propagator_oracle: steps must be >= 1");
    }
    const double h = t / steps;
    auto rhs = [&](double s, const Mat2& u) -> Mat2 { return -I * lab_hamiltonian(p, s).matrix() * u; };
    Mat2 u = Mat2::Identity();
    for (int n = 0; n < steps; ++n) {
        const double s = n * h;
        const Mat2 k1 = rhs(s, u);
        const Mat2 k2 = rhs(s + 0.5 * h, u + 0.5 * h * k1);
        const Mat2 k3 = rhs(s + 0.5 * h, u + 0.5 * h * k2);
        const Mat2 k4 = rhs(s + h, u + h * k3);
        u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return Operator2(u);
}

} // namespace ftls
