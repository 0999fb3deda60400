// thermo.hpp — Heat currents, power, entropy production and the laser-driven heat pump

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ftls/dissipator.hpp"
#include "ftls/floquet.hpp"
#include "ftls/kernels.hpp"

namespace ftls {

enum class Regime { Cooling, Heating, Other };

std::string_view to_string(Regime r);

// Cooling iff J_d > 0 and J_e < 0; Heating iff both < 0; Other otherwise.
Regime classify_regime(double j_dephasing, double j_em);

// Local current ((ω̄+qΩ)/ω̄) Tr[(L_{qω̄}(t)ρ(t)) H̄(t)], H̄(t) = U(t)H̄U†(t),
// for a Schrödinger-picture state ρ(t) given in the dressed basis. Terms with
// ω̄ = 0 return 0: their trace factor vanishes identically.
double local_heat_current(const SystemParams& p, const LocalTerm& term, const Operator2& rho_t, double t);

// Same current written through the local Gibbs state,
// -T Tr[(L_{qω̄}(t)ρ(t)) ln ρ̃_{qω̄}(t)]. Needs ω̄ > 0 and T > 0.
double local_heat_current_log_form(const SystemParams& p, const LocalTerm& term, const BathSpec& bath,
                                   const Operator2& rho_t, double t);

// ρ̃_{qω̄} ∝ exp(-(ω̄+qΩ) H̄ / (ω̄ T)), dressed basis. Needs ω̄ > 0 and T > 0.
Operator2 local_gibbs_state(const SystemParams& p, const LocalTerm& term, const BathSpec& bath);

// J̃ʲ = Σ_{q, ω̄>0} ((ω̄+qΩ)/ω̄) Tr[(L^j_{qω̄} ρ̃) H̄] in the interaction picture.
double stationary_current(const SystemParams& p, const Generator& l, std::size_t bath_index,
                          const DensityMatrix& rho_ss);
double stationary_current(const SystemParams& p, const Generator& l, std::size_t bath_index);

struct BathCurrent {
    std::string label;
    double temperature{0.0};
    double current{0.0};
};

struct ThermoReport {
    DensityMatrix rho;
    std::vector<BathCurrent> currents;
    double power{0.0};
    double entropy_rate{0.0}; // -Σ_{T>0} J̃ʲ/Tʲ
    Regime regime{Regime::Other};
    bool vacuum_excluded{false};      // a T = 0 bath was left out of entropy_rate
    bool zero_bohr_terms_dropped{false};
};

ThermoReport thermo_report(const SystemParams& p, const Generator& l);

// P̃ = -Σ_j J̃ʲ
double stationary_power(const ThermoReport& report);

struct EntropySample {
    double t{0.0};
    double entropy{0.0};
    double entropy_derivative{0.0}; // dS/dt = -Tr[ρ̇ ln ρ]
    double production{0.0};         // dS/dt - Σ_{T>0} Jʲ(t)/Tʲ
};

struct EntropyTrace {
    std::vector<EntropySample> samples;
    bool vacuum_excluded{false};
    std::string note;
};

// Evaluates the entropy production along ρ(t) = U(t)e^{tL}ρ₀U†(t). Eigenvalues
// of ρ below 1e-14 are clipped before the logarithm.
EntropyTrace entropy_production(const SystemParams& p, const Generator& l, const DensityMatrix& rho0,
                                std::span<const double> times);

// Tr[(Lρ)(ln ρ - ln ρ̃)]; non-positive for any LGKS generator.
double spohn_functional(const SuperOp& l, const Operator2& rho, const Operator2& rho_ss);

struct HeatPumpBaths {
    std::size_t em_index{0};
    std::size_t dephasing_index{0};
};

// Exactly one σ¹ bath and one σ³ bath, both at positive temperature.
HeatPumpBaths find_heatpump_baths(const std::vector<BathSpec>& baths);

struct HeatPumpRates {
    double delta0{0.0};      // (2g/Ω_R)² G_d(Ω_R)
    double delta_minus{0.0}; // ((Ω_R - Δ)/2Ω_R)² G_e(Ω - Ω_R)
    double delta_plus{0.0};  // ((Ω_R + Δ)/2Ω_R)² G_e(Ω + Ω_R)
    double Omega{0.0};
    double OmegaR{0.0};
    double Omega_plus{0.0};
    double Omega_minus{0.0};
};

HeatPumpRates heatpump_rates(const SystemParams& p, const BathSpec& em, const BathSpec& dephasing);

// ρ̃₁₁/ρ̃₂₂ of the two-bath population equation.
double heatpump_steady_ratio(const HeatPumpRates& r, double t_em, double t_deph);

struct HeatPumpCurrents {
    double j_dephasing{0.0};
    double j_em{0.0};
    double K{0.0};
};

HeatPumpCurrents heatpump_currents(const HeatPumpRates& r, double t_em, double t_deph);

struct SmallDetuningCurrents {
    double j_dephasing{0.0}; // D Δ
    double j_em{0.0};
    double D{0.0};
};

// Violated small-detuning conditions (Ω ≫ T_e, T_d; Ω_R ≪ Ω; Ω_R ≪ T_d), each
// "≫" meaning a ratio of at least `margin`. Empty when all hold.
std::vector<std::string> small_detuning_violations(const SystemParams& p, const BathSpec& em,
                                                   const BathSpec& dephasing, double margin = 10.0);

// Throws InvalidArgument listing the violated conditions.
SmallDetuningCurrents small_detuning_currents(const SystemParams& p, const BathSpec& em, const BathSpec& dephasing,
                                              double margin = 10.0);

struct SweepPoint {
    double Delta{0.0};
    double j_dephasing{0.0};
    double j_em{0.0};
    double power{0.0};
    double entropy_rate{0.0};
    Regime regime{Regime::Other};
    std::optional<double> j_dephasing_approx; // set when the small-detuning conditions hold
};

// Stationary heat-pump quantities along ω₀ = Ω + Δ for each Δ, from the
// assembled generator.
std::vector<SweepPoint> heatpump_sweep(double Omega, double g, const BathSpec& em, const BathSpec& dephasing,
                                       std::span<const double> deltas, double margin = 10.0,
                                       kernels::Exec exec = kernels::Exec::Parallel);

} // namespace ftls
