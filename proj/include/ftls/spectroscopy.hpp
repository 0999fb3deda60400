// spectroscopy.hpp — Resonance-fluorescence (Mollow) spectrum and its quantum-regression oracle

#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "ftls/dissipator.hpp"
#include "ftls/floquet.hpp"
#include "ftls/kernels.hpp"

namespace ftls {

enum class LineKind { Central, SideMinus, SidePlus };

std::string_view to_string(LineKind k);

struct SpectralLine {
    LineKind kind{LineKind::Central};
    double center{0.0};
    double width{0.0};
    double weight{0.0};
};

// Closed-form spectrum: an elastic delta at Ω plus three normalized Lorentzians
// at Ω (width γ₁) and Ω ∓ Ω_R (width γ₂). The delta is kept as a scalar and
// never appears in the sampled grid.
struct Spectrum {
    double elastic_center{0.0};
    double elastic_weight{0.0};
    std::array<SpectralLine, 3> lines{}; // central, side_minus, side_plus
    std::vector<double> omega;
    std::vector<double> intensity;

    double total_weight() const;
};

// Weights as printed for the detuned vacuum case. With normalize = true all
// four weights are rescaled to sum to one. Throws InvalidArgument for g = 0.
Spectrum mollow_spectrum(const SystemParams& p, double A, bool normalize = false);

// Fills spectrum.omega/intensity with the Lorentzian sum on `grid`.
void sample_spectrum(Spectrum& spectrum, std::vector<double> grid, kernels::Exec exec = kernels::Exec::Parallel);

std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

// Output of the regression oracle, in its own (unnormalized) units.
struct RegressionSpectrum {
    std::vector<double> omega;
    std::vector<double> intensity; // decaying part only
    double elastic_weight{0.0};    // weight of the δ(ω - Ω) term
    double total_intensity{0.0};   // elastic + ∫ intensity dω over ℝ
    double horizon_residual{0.0};  // max |decaying correlation| over the last period / |initial|
};

// I(ω) ∝ Re ∫₀^∞ e^{-iωt} tr{σ⁺ U(t)[e^{tL}(σ⁻ρ̃)]U†(t)} dt, evaluated on a
// time grid of step dt up to t_max. The non-decaying asymptote
// Tr(σ⁻ρ̃) tr{σ⁺ U(t)ρ̃U†(t)} is split off as the elastic weight; the rest is
// transformed by the trapezoid rule plus a single-exponential tail estimate.
// Throws NumericalError if the correlation has not decayed below 1e-8 of its
// initial value over the last drive period.
RegressionSpectrum regression_spectrum_oracle(const SystemParams& p, const Generator& l,
                                              const std::vector<double>& omega_grid, double t_max, double dt,
                                              kernels::Exec exec = kernels::Exec::Parallel);

struct SpectrumComparison {
    double scale{0.0};            // closed total weight / oracle total intensity
    double relative_l2{0.0};      // on the shared grid
    double elastic_rel_error{0.0};
};

// Requires closed.omega == oracle.omega.
SpectrumComparison compare_spectra(const Spectrum& closed, const RegressionSpectrum& oracle);

// Decay rate of the dressed coherence ρ₁₂ under L: -Re <E₁₂, L E₁₂>.
double coherence_decay_rate(const Generator& l);

} // namespace ftls
