// thermo.cpp — Heat currents, power, entropy production and the laser-driven heat pump

#include "ftls/thermo.hpp"

#include <cmath>
#include <exception>

#include <fmt/format.h>

#include "ftls/errors.hpp"

namespace ftls {

namespace {

constexpr cplx I{0.0, 1.0};

double weight(const SystemParams& p, const LocalTerm& term) {
    return term.op.combined_frequency(p.Omega) / term.op.omega_bar;
}

void require_thermal_positive_bohr(const LocalTerm& term, const BathSpec& bath) {
    if (term.op.bohr <= 0) {
        throw InvalidArgument("local Gibbs state undefined for omega_bar = 0");
    }
    if (!(bath.temperature > 0.0)) {
        throw InvalidArgument("local Gibbs state needs a positive bath temperature");
    }
}

} // namespace

std::string_view to_string(Regime r) {
    switch (r) {
    case Regime::Cooling:
        return "Cooling";
    case Regime::Heating:
        return "Heating";
    case Regime::Other:
        return "Other";
    }
    return "?";
}

Regime classify_regime(double j_dephasing, double j_em) {
    if (j_dephasing > 0.0 && j_em < 0.0) {
        return Regime::Cooling;
    }
    if (j_dephasing < 0.0 && j_em < 0.0) {
        return Regime::Heating;
    }
    return Regime::Other;
}

double local_heat_current(const SystemParams& p, const LocalTerm& term, const Operator2& rho_t, double t) {
    if (term.op.bohr == 0) {
        return 0.0;
    }
    const auto u = propagator_dressed(p, dressed_basis(p), t);
    const auto lr = u * term.superop.apply(u.adjoint() * rho_t * u) * u.adjoint();
    const auto hbar_t = u * mean_hamiltonian_dressed(p) * u.adjoint();
    return weight(p, term) * (lr * hbar_t).trace().real();
}

Operator2 local_gibbs_state(const SystemParams& p, const LocalTerm& term, const BathSpec& bath) {
    require_thermal_positive_bohr(term, bath);
    const double beta_eff = weight(p, term) / bath.temperature;
    // H̄ = diag(½Ω_R, -½Ω_R); shift by the larger exponent before exp to avoid overflow.
    const double a = -beta_eff * 0.5 * p.OmegaR;
    const double b = beta_eff * 0.5 * p.OmegaR;
    const double m = std::max(a, b);
    const double e1 = std::exp(a - m), e2 = std::exp(b - m);
    Mat2 rho = Mat2::Zero();
    rho(0, 0) = e1 / (e1 + e2);
    rho(1, 1) = e2 / (e1 + e2);
    return Operator2(rho, Basis::Dressed);
}

double local_heat_current_log_form(const SystemParams& p, const LocalTerm& term, const BathSpec& bath,
                                   const Operator2& rho_t, double t) {
    require_thermal_positive_bohr(term, bath);
    const auto u = propagator_dressed(p, dressed_basis(p), t);
    const auto lr = u * term.superop.apply(u.adjoint() * rho_t * u) * u.adjoint();
    // ln ρ̃ computed in closed form: -(β_eff H̄) - ln Z, exact even when ρ̃ is nearly pure.
    const double beta_eff = weight(p, term) / bath.temperature;
    const double x = 0.5 * beta_eff * p.OmegaR;
    const double log_z = std::abs(x) + std::log1p(std::exp(-2.0 * std::abs(x)));
    Mat2 log_rho = Mat2::Zero();
    log_rho(0, 0) = -x - log_z;
    log_rho(1, 1) = x - log_z;
    const auto log_rho_t = u * Operator2(log_rho, Basis::Dressed) * u.adjoint();
    return -bath.temperature * (lr * log_rho_t).trace().real();
}

double stationary_current(const SystemParams& p, const Generator& l, std::size_t bath_index,
                          const DensityMatrix& rho_ss) {
    if (bath_index >= l.baths.size()) {
        throw InvalidArgument("stationary_current: bath index out of range");
    }
    const auto hbar = mean_hamiltonian_dressed(p);
    double j = 0.0;
    for (const auto& term : l.terms) {
        if (term.bath_index != bath_index || term.op.bohr == 0) {
            continue;
        }
        j += weight(p, term) * (term.superop.apply(rho_ss.matrix()) * hbar).trace().real();
    }
    return j;
}

double stationary_current(const SystemParams& p, const Generator& l, std::size_t bath_index) {
    return stationary_current(p, l, bath_index, stationary_state(l));
}

ThermoReport thermo_report(const SystemParams& p, const Generator& l) {
    ThermoReport rep{stationary_state(l), {}, 0.0, 0.0, Regime::Other, false, false};
    for (std::size_t j = 0; j < l.baths.size(); ++j) {
        const auto& bath = l.baths[j];
        const double cur = stationary_current(p, l, j, rep.rho);
        rep.currents.push_back({bath.label, bath.temperature, cur});
        if (bath.temperature > 0.0) {
            rep.entropy_rate -= cur / bath.temperature;
        } else {
            rep.vacuum_excluded = true;
        }
    }
    for (const auto& term : l.terms) {
        rep.zero_bohr_terms_dropped = rep.zero_bohr_terms_dropped || term.op.bohr == 0;
    }
    rep.power = stationary_power(rep);
    if (l.baths.size() == 2 && l.baths[0].channel != l.baths[1].channel) {
        const std::size_t d = l.baths[0].channel == Channel::Sigma3 ? 0 : 1;
        rep.regime = classify_regime(rep.currents[d].current, rep.currents[1 - d].current);
    }
    return rep;
}

double stationary_power(const ThermoReport& report) {
    double s = 0.0;
    for (const auto& c : report.currents) {
        s += c.current;
    }
    return -s;
}

EntropyTrace entropy_production(const SystemParams& p, const Generator& l, const DensityMatrix& rho0,
                                std::span<const double> times) {
    EntropyTrace trace;
    for (const auto& bath : l.baths) {
        trace.vacuum_excluded = trace.vacuum_excluded || !(bath.temperature > 0.0);
    }
    if (trace.vacuum_excluded) {
        trace.note = "vacuum: second-law check via Spohn inequality only";
    }
    const auto basis = dressed_basis(p);
    for (double t : times) {
        const auto rho = evolve_schrodinger(p, l, rho0, t).matrix();
        const auto h = basis.to_dressed(lab_hamiltonian(p, t));
        const auto rho_dot = -I * commutator(h, rho) + schrodinger_generator_apply(p, l.total, rho, t);
        EntropySample s;
        s.t = t;
        s.entropy = von_neumann_entropy(rho);
        s.entropy_derivative = -(rho_dot * log_hermitian(rho)).trace().real();
        s.production = s.entropy_derivative;
        for (const auto& term : l.terms) {
            const double temp = l.baths[term.bath_index].temperature;
            if (temp > 0.0) {
                s.production -= local_heat_current(p, term, rho, t) / temp;
            }
        }
        trace.samples.push_back(s);
    }
    return trace;
}

double spohn_functional(const SuperOp& l, const Operator2& rho, const Operator2& rho_ss) {
    return (l.apply(rho) * (log_hermitian(rho) - log_hermitian(rho_ss))).trace().real();
}

HeatPumpBaths find_heatpump_baths(const std::vector<BathSpec>& baths) {
    if (baths.size() != 2 || baths[0].channel == baths[1].channel) {
        throw InvalidArgument("heat pump needs exactly two baths: one sigma1 (electromagnetic) and one sigma3 "
                              "(dephasing)");
    }
    HeatPumpBaths hb;
    hb.em_index = baths[0].channel == Channel::Sigma1 ? 0 : 1;
    hb.dephasing_index = 1 - hb.em_index;
    for (const auto& b : baths) {
        if (!(b.temperature > 0.0)) {
            throw InvalidArgument(fmt::format("heat pump bath '{}' must have a positive temperature", b.label));
        }
    }
    return hb;
}

HeatPumpRates heatpump_rates(const SystemParams& p, const BathSpec& em, const BathSpec& dephasing) {
    HeatPumpRates r;
    r.Omega = p.Omega;
    r.OmegaR = p.OmegaR;
    r.Omega_plus = p.Omega + p.OmegaR;
    r.Omega_minus = p.Omega - p.OmegaR;
    if (!(r.Omega_minus > 0.0)) {
        throw DegeneracyError("heat pump rates need Omega - Omega_R > 0");
    }
    const double c = (p.OmegaR + p.Delta) / (2.0 * p.OmegaR);
    const double a = (p.OmegaR - p.Delta) / (2.0 * p.OmegaR);
    r.delta0 = std::pow(2.0 * p.g / p.OmegaR, 2) * evaluate_density(dephasing.density, p.OmegaR);
    r.delta_plus = c * c * evaluate_density(em.density, r.Omega_plus);
    r.delta_minus = a * a * evaluate_density(em.density, r.Omega_minus);
    return r;
}

double heatpump_steady_ratio(const HeatPumpRates& r, double t_em, double t_deph) {
    const double x = std::exp(-r.OmegaR / t_deph);
    const double ep = std::exp(-r.Omega_plus / t_em);
    const double em = std::exp(-r.Omega_minus / t_em);
    return (x * r.delta0 + r.delta_minus + ep * r.delta_plus) / (r.delta0 + em * r.delta_minus + r.delta_plus);
}

HeatPumpCurrents heatpump_currents(const HeatPumpRates& r, double t_em, double t_deph) {
    const double x = std::exp(-r.OmegaR / t_deph);
    const double ep = std::exp(-r.Omega_plus / t_em);
    const double em = std::exp(-r.Omega_minus / t_em);
    const double d0 = r.delta0, dm = r.delta_minus, dp = r.delta_plus;
    HeatPumpCurrents c;
    c.K = ((1.0 + em) * dm + (1.0 + ep) * dp + (1.0 + x) * d0) / r.OmegaR;
    c.j_dephasing = -(d0 / c.K) * (dm * (1.0 - x * em) + dp * (ep - x));
    c.j_em = (2.0 * (std::exp(-2.0 * r.Omega / t_em) - 1.0) * r.Omega * dm * dp +
              (em * x - 1.0) * r.Omega_minus * d0 * dm + (ep - x) * r.Omega_plus * d0 * dp) /
             (r.OmegaR * c.K);
    return c;
}

std::vector<std::string> small_detuning_violations(const SystemParams& p, const BathSpec& em,
                                                   const BathSpec& dephasing, double margin) {
    std::vector<std::string> v;
    auto check = [&](double big, double small, const char* what) {
        if (!(big >= margin * small)) {
            v.push_back(fmt::format("{} (ratio {:.4g} < {:.4g})", what, big / small, margin));
        }
    };
    check(p.Omega, em.temperature, "Omega >> T_e");
    check(p.Omega, dephasing.temperature, "Omega >> T_d");
    check(p.Omega, p.OmegaR, "Omega_R << Omega");
    check(dephasing.temperature, p.OmegaR, "Omega_R << T_d");
    return v;
}

SmallDetuningCurrents small_detuning_currents(const SystemParams& p, const BathSpec& em, const BathSpec& dephasing,
                                              double margin) {
    const auto bad = small_detuning_violations(p, em, dephasing, margin);
    if (!bad.empty()) {
        std::string msg = "small-detuning conditions violated:";
        for (const auto& b : bad) {
            msg += " " + b + ";";
        }
        throw InvalidArgument(msg);
    }
    const auto r = heatpump_rates(p, em, dephasing);
    const double denom = 2.0 * r.delta0 + r.delta_minus + r.delta_plus;
    SmallDetuningCurrents s;
    s.D = r.delta0 * evaluate_density(em.density, p.Omega) / denom;
    s.j_dephasing = s.D * p.Delta;
    s.j_em = -p.Omega * (2.0 * r.delta_minus * r.delta_plus + r.delta0 * (r.delta_minus + r.delta_plus)) / denom;
    return s;
}

namespace {

SweepPoint sweep_point(double Omega, double g, const BathSpec& em, const BathSpec& dephasing, double delta,
                       double margin) {
    const auto p = make_params(Omega + delta, Omega, g);
    const auto gen = total_generator(p, {em, dephasing});
    const auto rho = stationary_state(gen);
    SweepPoint pt;
    pt.Delta = delta;
    pt.j_em = stationary_current(p, gen, 0, rho);
    pt.j_dephasing = stationary_current(p, gen, 1, rho);
    pt.power = -(pt.j_em + pt.j_dephasing);
    pt.entropy_rate = -(pt.j_em / em.temperature + pt.j_dephasing / dephasing.temperature);
    pt.regime = classify_regime(pt.j_dephasing, pt.j_em);
    if (small_detuning_violations(p, em, dephasing, margin).empty()) {
        pt.j_dephasing_approx = small_detuning_currents(p, em, dephasing, margin).j_dephasing;
    }
    return pt;
}

} // namespace

std::vector<SweepPoint> heatpump_sweep(double Omega, double g, const BathSpec& em, const BathSpec& dephasing,
                                       std::span<const double> deltas, double margin, kernels::Exec exec) {
    std::vector<SweepPoint> out(deltas.size());
    const auto n = static_cast<std::ptrdiff_t>(deltas.size());
    if (exec == kernels::Exec::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            out[i] = sweep_point(Omega, g, em, dephasing, deltas[i], margin);
        }
        return out;
    }
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = sweep_point(Omega, g, em, dephasing, deltas[i], margin);
        } catch (...) {
#pragma omp critical
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

} // namespace ftls
