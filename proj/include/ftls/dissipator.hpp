// dissipator.hpp — Bath spectral densities, Floquet LGKS generators, evolution and stationary states

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ftls/algebra.hpp"
#include "ftls/floquet.hpp"
#include "ftls/transitions.hpp"

namespace ftls {

// G(ω) = A ω³, the electromagnetic vacuum density.
struct CubicDensity {
    double A{1.0};
    double operator()(double omega) const { return A * omega * omega * omega; }
    bool operator==(const CubicDensity&) const = default;
};

struct FlatDensity {
    double value{1.0};
    double operator()(double) const { return value; }
    bool operator==(const FlatDensity&) const = default;
};

// Piecewise-linear in ω, zero outside [omegas.front(), omegas.back()].
struct TabulatedDensity {
    std::vector<double> omegas; // strictly increasing
    std::vector<double> values;
    double operator()(double omega) const;
    bool operator==(const TabulatedDensity&) const = default;
};

using SpectralDensity = std::variant<CubicDensity, FlatDensity, TabulatedDensity>;

// Density at ω >= 0 as given (no KMS reflection).
double evaluate_density(const SpectralDensity& g, double omega);

struct BathSpec {
    std::string label;
    Channel channel{Channel::Sigma1};
    double temperature{0.0}; // 0 means vacuum
    SpectralDensity density{CubicDensity{}};

    bool operator==(const BathSpec&) const = default;
};

// G(ω) for ω > 0; e^{-|ω|/T} G(|ω|) for ω < 0 (zero at T = 0); G(0⁺) at ω = 0.
double kms_density(const BathSpec& bath, double omega);

struct RateSet {
    double delta0{0.0};
    double delta_minus{0.0};
    double delta_plus{0.0};
    double gamma1{0.0};
    double gamma2{0.0};
};

// Vacuum fluorescence rates with G(ω) = Aω³:
// δ₀ = (2g/Ω_R)² G(Ω), δ± = ((Ω_R ± Δ)/(2Ω_R))² G(Ω ± Ω_R),
// γ₁ = δ₋ + δ₊, γ₂ = ½(δ₋ + δ₊ + δ₀).
RateSet fluorescence_rates(const SystemParams& p, double A);

// A validated state: Hermitian and unit trace to 1e-12, eigenvalues >= -1e-10.
class DensityMatrix {
public:
    explicit DensityMatrix(const Operator2& m);
    const Operator2& matrix() const { return m_; }
    Basis basis() const { return m_.basis(); }
    cplx operator()(int r, int c) const { return m_(r, c); }

private:
    Operator2 m_;
};

// Provenance record of one local generator L^j_{qω̄} inside a Generator.
struct LocalTerm {
    std::size_t bath_index{0};
    TransitionOperator op;   // ω̄ >= 0 representative
    double rate_forward{0};  // G(ω̄ + qΩ), multiplies D[S]
    double rate_backward{0}; // G(-ω̄ - qΩ), multiplies D[S†]
    SuperOp superop{SuperOp::zero(Basis::Dressed)};
};

// Interaction-picture generator L = Σ_j Σ_q Σ_{ω̄≥0} L^j_{qω̄} in the dressed basis.
struct Generator {
    SuperOp total{SuperOp::zero(Basis::Dressed)};
    std::vector<LocalTerm> terms;
    std::vector<BathSpec> baths;
};

// L_{qω̄} = G(ω̄+qΩ) D[S] + G(-ω̄-qΩ) D[S†], D[S]ρ = SρS† - ½{S†S, ρ}.
// The self-conjugate component (q = 0, ω̄ = 0) is one Fourier term, so it
// contributes G(0) D[S] once.
SuperOp local_generator(const TransitionOperator& s, const BathSpec& bath, const SystemParams& p);

// Conjugate pairs {(q,ω̄), (-q,-ω̄)} are summed once: ω̄ > 0 for every q,
// ω̄ = 0 for q >= 0.
std::vector<TransitionOperator> generator_representatives(const std::vector<TransitionOperator>& ops);

Generator total_generator(const SystemParams& p, const std::vector<BathSpec>& baths);

// e^{tL} ρ₀
DensityMatrix evolve_interaction(const Generator& l, const DensityMatrix& rho0, double t);

// ρ(t) = U(t) [e^{tL} ρ₀] U†(t), returned in the dressed basis.
DensityMatrix evolve_schrodinger(const SystemParams& p, const Generator& l, const DensityMatrix& rho0, double t);

// L(t)ρ = U(t) L(U†(t) ρ U(t)) U†(t) for a dressed-basis superoperator.
Operator2 schrodinger_generator_apply(const SystemParams& p, const SuperOp& l, const Operator2& rho, double t);

// Unique trace-one kernel element of L, found from the SVD of the 4x4 matrix.
// Throws DegeneracyError when more than one singular value falls below
// 1e-10 σ_max.
DensityMatrix stationary_state(const Generator& l);

// Phenomenological damping/pumping/dephasing generator in the lab basis:
// γ↓ D[σ⁻] + γ↑ D[σ⁺] - (δ/2)[σ³, [σ³, ρ]].
SuperOp phenomenological_generator(double gamma_down, double gamma_up, double dephasing);

} // namespace ftls
