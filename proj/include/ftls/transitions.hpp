// transitions.hpp — Floquet–Fourier transition operators of the σ¹ and σ³ couplings

#pragma once

#include <string>
#include <vector>

#include "ftls/algebra.hpp"
#include "ftls/floquet.hpp"

namespace ftls {

enum class Channel { Sigma1, Sigma3 };

std::string_view to_string(Channel c);
Operator2 coupling_operator(Channel c); // lab basis

// One Fourier component S_q(ω̄) of S(t) = U†(t) S U(t), dressed basis.
// Keyed by the pair (q, k) with ω̄ = k Ω_R, k ∈ {-1, 0, 1}; the combined
// frequency ω̄ + qΩ is derived, never used as a key.
struct TransitionOperator {
    Operator2 matrix{Operator2::zero(Basis::Dressed)};
    double omega_bar{0.0};
    int bohr{0}; // k
    int q{0};
    Channel channel{Channel::Sigma1};
    std::string bath;

    double combined_frequency(double Omega) const { return omega_bar + q * Omega; }
};

// All six components (q = ±1, k ∈ {-1,0,1}) of σ¹(t). The q = 1 entries are
// the tabulated ones; q = -1 entries are their adjoints.
std::vector<TransitionOperator> sigma1_transition_ops(const SystemParams& p, const std::string& bath = {});

// The three components (q = 0, k ∈ {-1,0,1}) of σ³(t).
std::vector<TransitionOperator> sigma3_transition_ops(const SystemParams& p, const std::string& bath = {});

std::vector<TransitionOperator> transition_ops(const SystemParams& p, Channel c, const std::string& bath = {});

// Throws DegeneracyError if two distinct components share a Fourier exponent
// e^{-iνt}, or if distinct non-conjugate components share |ν| (within 1e-9).
void check_frequency_collisions(const std::vector<TransitionOperator>& ops, double Omega);

// U_d†(t) S U_d(t) for S given in the dressed basis.
Operator2 heisenberg_coupling(const SystemParams& p, const Operator2& s, double t);

// Σ S_q(ω̄) e^{-i(ω̄+qΩ)t}
Operator2 fourier_reconstruct(const std::vector<TransitionOperator>& ops, double Omega, double t);

struct DecompositionResult {
    std::vector<TransitionOperator> ops;
    double min_separation{0.0}; // smallest gap between candidate frequencies
    double resolution{0.0};     // 2π / sampling window
    bool aliasing_warning{false};
};

// Least-squares projection of sampled S(t) onto e^{-i(qΩ + kΩ_R)t} for
// |q|, |k| <= 2. Components with max entry below 1e-8 are dropped. Raises
// aliasing_warning when two candidate frequencies sit closer than twice the
// window resolution (Ω_R/Ω near a small-denominator rational).
DecompositionResult numeric_decomposition_oracle(const SystemParams& p, const Operator2& s, int n_periods,
                                                 int samples_per_period);

} // namespace ftls
