// floquet.hpp — Driven two-level system: parameters, exact propagator, dressed basis

#pragma once

#include <Eigen/Dense>

#include "ftls/algebra.hpp"

namespace ftls {

// Drive and atom parameters in ħ = 1 units. Built only through make_params.
struct SystemParams {
    double omega0{0.0}; // atomic transition frequency
    double Omega{0.0};  // laser frequency
    double g{0.0};      // drive amplitude
    double Delta{0.0};  // omega0 - Omega
    double OmegaR{0.0}; // sqrt(4 g^2 + Delta^2)
    double tau{0.0};    // 2π / Omega
};

// Rejects Omega <= 0, g < 0 and Omega_R > Omega.
SystemParams make_params(double omega0, double Omega, double g);

// H(t) = ½ω₀σ³ + g(σ⁻e^{iΩt} + σ⁺e^{-iΩt}) in the lab basis.
Operator2 lab_hamiltonian(const SystemParams& p, double t);

// H̄ = ½Δσ³ + gσ¹ (lab basis). Note U(τ) = exp(-i(H̄ - ½Ω)τ): the factor
// exp(-iπσ³) = -I from the rotating frame shifts every quasienergy by -Ω/2.
Operator2 mean_hamiltonian(const SystemParams& p);

// U(t) = exp(-½itΩσ³) exp(-it(½Δσ³ + gσ¹)), lab basis.
Operator2 propagator(const SystemParams& p, double t);

// Eigenbasis of H̄. φ₁ belongs to the upper branch H̄φ₁ = +½Ω_R φ₁; the
// quasienergies carry the rotating-frame shift, ε₁ = -½(Ω - Ω_R) and
// ε₂ = -½(Ω + Ω_R). Phases follow φ₁ ∝ (Δ + Ω_R, 2g), φ₂ ∝ (Δ - Ω_R, 2g).
struct DressedBasis {
    double eps1{0.0};
    double eps2{0.0};
    Eigen::Vector2cd phi1;
    Eigen::Vector2cd phi2;

    // Columns φ₁, φ₂: lab components of the dressed basis vectors.
    Mat2 change_of_basis() const;
    Operator2 to_dressed(const Operator2& lab) const;
    Operator2 to_lab(const Operator2& dressed) const;
};

// Throws DegeneracyError when g = Δ = 0 (H̄ = 0 has no preferred basis).
DressedBasis dressed_basis(const SystemParams& p);

// H̄ in its own eigenbasis: diag(½Ω_R, -½Ω_R).
Operator2 mean_hamiltonian_dressed(const SystemParams& p);

// U(t) expressed in the dressed basis.
Operator2 propagator_dressed(const SystemParams& p, const DressedBasis& basis, double t);

// Time-ordered exponential of the lab Hamiltonian by fixed-step classical
// RK4 on dU/ds = -iH(s)U. Reference path for the closed-form propagator.
Operator2 propagator_oracle(const SystemParams& p, double t, int steps);

} // namespace ftls
