// oracles.hpp — Fixed-step RK4 reference integrators used to check the closed forms

#pragma once

#include "ftls/algebra.hpp"
#include "ftls/floquet.hpp"

namespace ftls::oracle {

// dρ/dt = Lρ with constant L.
Operator2 integrate_interaction(const SuperOp& l, const Operator2& rho0, double t, int steps);

// dρ/dt = -i[H(t), ρ] + L(t)ρ integrated directly in the lab basis, with
// L(t)ρ = U(t) L(U†(t)ρU(t)) U†(t). `l` and `rho0` are dressed-basis; the
// result is returned in the dressed basis.
Operator2 integrate_schrodinger(const SystemParams& p, const SuperOp& l, const Operator2& rho0, double t, int steps);

// dp₁/dt = -rate_out p₁ + rate_in (1 - p₁)
double integrate_population(double rate_out, double rate_in, double p1_0, double t, int steps);

} // namespace ftls::oracle
