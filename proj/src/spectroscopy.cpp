// spectroscopy.cpp — Resonance-fluorescence (Mollow) spectrum and its quantum-regression oracle

#include "ftls/spectroscopy.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "ftls/errors.hpp"

namespace ftls {

namespace {
constexpr cplx I{0.0, 1.0};
constexpr double kHorizonDecay = 1e-8;
constexpr int kElasticAverageSamples = 64;
} // namespace

std::string_view to_string(LineKind k) {
    switch (k) {
    case LineKind::Central:
        return "central";
    case LineKind::SideMinus:
        return "side_minus";
    case LineKind::SidePlus:
        return "side_plus";
    }
    return "?";
}

double Spectrum::total_weight() const {
    double s = elastic_weight;
    for (const auto& l : lines) {
        s += l.weight;
    }
    return s;
}

Spectrum mollow_spectrum(const SystemParams& p, double A, bool normalize) {
    if (p.g == 0.0) {
        throw InvalidArgument("mollow_spectrum: g = 0 gives Omega_R = |Delta| and vanishing side-weight "
                              "denominators; there is no driven fluorescence problem");
    }
    const auto r = fluorescence_rates(p, A);
    const double g4 = 4.0 * p.g * p.g;
    const double rm = p.OmegaR - p.Delta;
    const double rp = p.OmegaR + p.Delta;
    const double w_plus = g4 * r.delta_plus / (rp * rp * r.gamma1);   // line at Ω - Ω_R
    const double w_minus = g4 * r.delta_minus / (rm * rm * r.gamma1); // line at Ω + Ω_R

    Spectrum s;
    s.elastic_center = p.Omega;
    s.elastic_weight = std::pow((r.delta_minus - r.delta_plus) / r.gamma1, 2);
    s.lines[0] = {LineKind::Central, p.Omega, r.gamma1,
                  4.0 * (g4 * r.delta_plus / (rm * rm * r.gamma1)) * (g4 * r.delta_minus / (rp * rp * r.gamma1))};
    s.lines[1] = {LineKind::SideMinus, p.Omega - p.OmegaR, r.gamma2, w_plus};
    s.lines[2] = {LineKind::SidePlus, p.Omega + p.OmegaR, r.gamma2, w_minus};
    if (normalize) {
        const double total = s.total_weight();
        s.elastic_weight /= total;
        for (auto& l : s.lines) {
            l.weight /= total;
        }
    }
    return s;
}

void sample_spectrum(Spectrum& spectrum, std::vector<double> grid, kernels::Exec exec) {
    std::array<kernels::LorentzianLine, 3> lines;
    for (std::size_t i = 0; i < 3; ++i) {
        lines[i] = {spectrum.lines[i].center, spectrum.lines[i].width, spectrum.lines[i].weight};
    }
    spectrum.omega = std::move(grid);
    spectrum.intensity.assign(spectrum.omega.size(), 0.0);
    kernels::lorentzian_sum(exec, lines, spectrum.omega, spectrum.intensity);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    for (std::size_t i = 0; i < points; ++i) {
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return g;
}

RegressionSpectrum regression_spectrum_oracle(const SystemParams& p, const Generator& l,
                                              const std::vector<double>& omega_grid, double t_max, double dt,
                                              kernels::Exec exec) {
    if (!(dt > 0.0) || !(t_max > dt)) {
        throw InvalidArgument("regression_spectrum_oracle: need 0 < dt < t_max");
    }
    const auto basis = dressed_basis(p);
    const auto sp = basis.to_dressed(sigma_plus());
    const auto sm = basis.to_dressed(sigma_minus());
    const auto rho_ss = stationary_state(l).matrix();
    const auto steps = static_cast<std::size_t>(std::ceil(t_max / dt));

    const Operator2 x0 = sm * rho_ss;
    const cplx tr_x0 = x0.trace();
    const SuperOp step = superop_exp(l.total, dt);

    auto asymptote = [&](double t) {
        const auto u = propagator_dressed(p, basis, t);
        return tr_x0 * (sp * u * rho_ss * u.adjoint()).trace();
    };

    std::vector<cplx> decaying(steps + 1);
    Operator2 x = x0;
    for (std::size_t n = 0; n <= steps; ++n) {
        const double t = static_cast<double>(n) * dt;
        const auto u = propagator_dressed(p, basis, t);
        const cplx c = (sp * u * x * u.adjoint()).trace();
        decaying[n] = c - asymptote(t);
        x = step.apply(x);
    }

    RegressionSpectrum out;
    const double d0 = std::abs(decaying.front());
    const auto last_period = static_cast<std::size_t>(std::ceil(p.tau / dt));
    double tail_max = 0.0;
    for (std::size_t n = steps > last_period ? steps - last_period : 0; n <= steps; ++n) {
        tail_max = std::max(tail_max, std::abs(decaying[n]));
    }
    out.horizon_residual = d0 > 0.0 ? tail_max / d0 : 0.0;
    if (out.horizon_residual > kHorizonDecay) {
        throw NumericalError(fmt::format(
            "regression_spectrum_oracle: correlation decayed only to {:.3g} of its initial value by t_max = {:.6g}; "
            "increase the horizon",
            out.horizon_residual, t_max));
    }

    // Elastic weight: π times the ω = Ω Fourier coefficient of the periodic asymptote.
    cplx mean{0.0, 0.0};
    for (int k = 0; k < kElasticAverageSamples; ++k) {
        const double t = p.tau * k / kElasticAverageSamples;
        mean += std::exp(-I * p.Omega * t) * asymptote(t);
    }
    out.elastic_weight = std::numbers::pi * (mean / static_cast<double>(kElasticAverageSamples)).real();

    out.omega = omega_grid;
    out.intensity.assign(omega_grid.size(), 0.0);
    kernels::damped_transform(exec, decaying, dt, out.omega, out.intensity);

    // Tail beyond t_max, modelled as the locally dominant damped exponential.
    const cplx d_last = decaying[steps];
    const cplx d_prev = decaying[steps - 1];
    if (std::abs(d_prev) > 0.0 && std::abs(d_last) < std::abs(d_prev)) {
        const cplx lambda = std::log(d_last / d_prev) / dt;
        const double t_end = static_cast<double>(steps) * dt;
        for (std::size_t j = 0; j < out.omega.size(); ++j) {
            const double w = out.omega[j];
            out.intensity[j] += (d_last * std::exp(-I * w * t_end) / (I * w - lambda)).real();
        }
    }

    // ∫_ℝ Re ∫₀^∞ e^{-iωt} D(t) dt dω = π Re D(0)
    out.total_intensity = out.elastic_weight + std::numbers::pi * decaying.front().real();
    return out;
}

SpectrumComparison compare_spectra(const Spectrum& closed, const RegressionSpectrum& oracle) {
    if (closed.omega != oracle.omega) {
        throw InvalidArgument("compare_spectra: spectra are sampled on different grids");
    }
    SpectrumComparison c;
    c.scale = closed.total_weight() / oracle.total_intensity;
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < closed.omega.size(); ++j) {
        const double diff = c.scale * oracle.intensity[j] - closed.intensity[j];
        num += diff * diff;
        den += closed.intensity[j] * closed.intensity[j];
    }
    c.relative_l2 = std::sqrt(num / den);
    const double elastic_diff = std::abs(c.scale * oracle.elastic_weight - closed.elastic_weight);
    c.elastic_rel_error = closed.elastic_weight > 0.0 ? elastic_diff / closed.elastic_weight : elastic_diff;
    return c;
}

double coherence_decay_rate(const Generator& l) {
    Mat2 e12 = Mat2::Zero();
    e12(0, 1) = 1.0;
    const auto out = l.total.apply(Operator2(e12, Basis::Dressed));
    return -out(0, 1).real();
}

} // namespace ftls
