// verify.cpp — Invariant suites of every module, seeded and deterministic

#include "ftls/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "ftls/csv.hpp"
#include "ftls/errors.hpp"
#include "ftls/oracles.hpp"
#include "ftls/spectroscopy.hpp"
#include "ftls/thermo.hpp"
#include "ftls/transitions.hpp"

namespace ftls {

using nlohmann::json;

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- helpers ---------------------------------------------------------------

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h = (h ^ c) * 1099511628211ULL;
    }
    std::uint64_t z = seed ^ h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Tracker {
    double max_error{-kInf};
    json worst;
    std::size_t cases{0};
    std::string note;

    void update(double err, const json& params) {
        if (std::isnan(err)) {
            err = kInf;
        }
        if (err > max_error || worst.is_null()) {
            max_error = std::max(err, max_error);
            worst = params;
        }
    }
};

struct Context {
    Rng rng;
    std::size_t cases;
};

json params_json(const SystemParams& p) {
    return {{"omega0", p.omega0}, {"Omega", p.Omega}, {"g", p.g}};
}

json matrix_json(const Operator2& m) {
    json a = json::array();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            a.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    return a;
}

json baths_json(const std::vector<BathSpec>& baths) {
    json a = json::array();
    for (const auto& b : baths) {
        a.push_back(serialize_bath(b));
    }
    return a;
}

// Ω_R/Ω drawn from [lo, hi], orientation θ of (Δ, 2g) away from the g = 0 axis.
SystemParams random_params(Rng& r, double lo = 0.05, double hi = 0.9) {
    const double omega = r.uniform(0.5, 3.0);
    const double omega_r = omega * r.uniform(lo, hi);
    const double theta = r.uniform(0.1, std::numbers::pi - 0.1);
    const double delta = omega_r * std::cos(theta);
    const double g = 0.5 * omega_r * std::sin(theta);
    return make_params(omega + delta, omega, g);
}

Mat2 random_matrix(Rng& r) {
    Mat2 m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m(i, j) = cplx(r.uniform(-1.0, 1.0), r.uniform(-1.0, 1.0));
        }
    }
    return m;
}

Operator2 random_hermitian(Rng& r, Basis b) {
    const Mat2 m = random_matrix(r);
    return Operator2(0.5 * (m + m.adjoint()), b);
}

// Full-rank random state: AA†/Tr(AA†) with the smallest eigenvalue bounded away from 0.
Operator2 random_state(Rng& r, Basis b) {
    const Mat2 m = random_matrix(r);
    Mat2 rho = m * m.adjoint() + 0.01 * Mat2::Identity();
    rho /= rho.trace();
    return Operator2(rho, b);
}

Operator2 random_diagonal_state(Rng& r) {
    const double p = r.uniform(0.0, 1.0);
    Mat2 m = Mat2::Zero();
    m(0, 0) = p;
    m(1, 1) = 1.0 - p;
    return Operator2(m, Basis::Dressed);
}

SpectralDensity random_density(Rng& r, bool allow_cubic) {
    if (allow_cubic && r.coin()) {
        return CubicDensity{r.uniform(0.1, 1.0)};
    }
    return FlatDensity{r.uniform(0.1, 1.0)};
}

// One σ¹ bath (vacuum or thermal) plus, half the time, a thermal σ³ bath.
std::vector<BathSpec> random_baths(Rng& r, bool allow_vacuum = true) {
    std::vector<BathSpec> baths;
    const double te = (allow_vacuum && r.coin()) ? 0.0 : r.uniform(0.1, 3.0);
    baths.push_back({"em", Channel::Sigma1, te, random_density(r, true)});
    if (r.coin()) {
        baths.push_back({"dephasing", Channel::Sigma3, r.uniform(0.1, 3.0), random_density(r, true)});
    }
    return baths;
}

struct HeatPumpCase {
    SystemParams p;
    BathSpec em;
    BathSpec deph;
};

HeatPumpCase random_heatpump(Rng& r) {
    return {random_params(r, 0.05, 0.9), {"em", Channel::Sigma1, r.uniform(0.1, 3.0), random_density(r, true)},
            {"dephasing", Channel::Sigma3, r.uniform(0.1, 3.0), random_density(r, true)}};
}

json heatpump_json(const HeatPumpCase& c) {
    return {{"system", params_json(c.p)}, {"baths", baths_json({c.em, c.deph})}};
}

SystemParams reference_params() {
    return make_params(0.86, 0.85, 0.075);
}

json merged(json a, const json& b) {
    a.update(b);
    return a;
}

double rel(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

const TransitionOperator* find_op(const std::vector<TransitionOperator>& ops, int q, int k) {
    for (const auto& op : ops) {
        if (op.q == q && op.bohr == k) {
            return &op;
        }
    }
    return nullptr;
}

// ---- algebra ---------------------------------------------------------------

void suite_algebra_lgks(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const Operator2 s(random_matrix(c.rng), Basis::Dressed);
        const double rate = c.rng.uniform(0.0, 2.0);
        const auto l = lindblad_superop(s, rate);
        const auto rho = random_hermitian(c.rng, Basis::Dressed);
        const auto out = l.apply(rho);
        t.update(std::max(std::abs(out.trace()), distance(out, out.adjoint())),
                 {{"case", i}, {"S", matrix_json(s)}, {"rate", rate}, {"rho", matrix_json(rho)}});
    }
}

void suite_algebra_group_law(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto h = random_hermitian(c.rng, Basis::Lab);
        const double a = c.rng.uniform(-5.0, 5.0), b = c.rng.uniform(-5.0, 5.0);
        const auto ua = expm_hermitian(h, a);
        const double e1 = distance(ua * expm_hermitian(h, b), expm_hermitian(h, a + b));
        const double e2 = distance(ua.adjoint() * ua, Operator2::identity());
        t.update(std::max(e1, e2), {{"case", i}, {"H", matrix_json(h)}, {"t", a}, {"s", b}});
    }
}

void suite_algebra_pauli(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const Operator2 m(random_matrix(c.rng));
        t.update(distance(pauli_reconstruct(pauli_decompose(m)), m), {{"case", i}, {"M", matrix_json(m)}});
    }
}

void suite_algebra_vectorize(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const Operator2 m(random_matrix(c.rng), Basis::Dressed);
        t.update(distance(devectorize(vectorize(m), Basis::Dressed), m), {{"case", i}, {"M", matrix_json(m)}});
    }
}

// ---- floquet ---------------------------------------------------------------

void suite_floquet_oracle(Context&, Tracker& t) {
    const auto p = reference_params();
    for (double frac : {1.0 / 7.0, 1.0 / 3.0, 1.0, 3.0}) {
        const double time = frac * p.tau;
        const double err = distance(propagator(p, time), propagator_oracle(p, time, 100000));
        t.update(err, {{"system", params_json(p)}, {"t", time}, {"steps", 100000}});
        ++t.cases;
    }
}

void suite_floquet_order(Context&, Tracker& t) {
    const auto p = reference_params();
    const auto exact = propagator(p, p.tau);
    double order = kInf;
    double prev = distance(propagator_oracle(p, p.tau, 50), exact);
    for (int n : {100, 200}) {
        const double e = distance(propagator_oracle(p, p.tau, n), exact);
        order = std::min(order, std::log2(prev / e));
        prev = e;
        ++t.cases;
    }
    t.note = fmt::format("measured order {:.4f} (required >= 3.8)", order);
    t.update(std::max(0.0, 3.8 - order), {{"system", params_json(p)}, {"steps", {50, 100, 200}}, {"order", order}});
}

void suite_floquet_unitarity(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const double time = c.rng.uniform(0.0, 10.0 * p.tau);
        const auto u = propagator(p, time);
        t.update(distance(u.adjoint() * u, Operator2::identity()),
                 {{"case", i}, {"system", params_json(p)}, {"t", time}});
    }
}

void suite_floquet_periodicity(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const double time = c.rng.uniform(0.0, 5.0 * p.tau);
        const auto ut = propagator(p, p.tau);
        const double e1 = distance(propagator(p, time + p.tau), propagator(p, time) * ut);
        // U(τ) = exp(-i(H̄ - ½Ω)τ) = -exp(-iH̄τ)
        const double e2 = distance(ut, cplx(-1.0) * expm_hermitian(mean_hamiltonian(p), p.tau));
        t.update(std::max(e1, e2), {{"case", i}, {"system", params_json(p)}, {"t", time}});
    }
}

void suite_floquet_dressed(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto b = dressed_basis(p);
        const Mat2 h = mean_hamiltonian(p).matrix();
        const double half = 0.5 * p.OmegaR;
        double err = (h * b.phi1 - half * b.phi1).norm();
        err = std::max(err, (h * b.phi2 + half * b.phi2).norm());
        err = std::max(err, std::abs(b.phi1.dot(b.phi2)));
        err = std::max(err, std::abs(b.phi1.norm() - 1.0));
        err = std::max(err, std::abs(b.phi2.norm() - 1.0));
        err = std::max(err, std::abs(b.eps1 - b.eps2 - p.OmegaR));
        err = std::max(err, std::abs(b.eps1 + 0.5 * (p.Omega - p.OmegaR)));
        t.update(err, {{"case", i}, {"system", params_json(p)}});
    }
}

// ---- transitions -----------------------------------------------------------

void suite_transitions_commutation(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto h = mean_hamiltonian_dressed(p);
        for (auto ch : {Channel::Sigma1, Channel::Sigma3}) {
            const auto ops = transition_ops(p, ch);
            double err = 0.0;
            for (const auto& op : ops) {
                err = std::max(err, (commutator(h, op.matrix) + cplx(op.omega_bar) * op.matrix).norm());
                const auto* partner = find_op(ops, -op.q, -op.bohr);
                err = std::max(err, partner ? distance(partner->matrix, op.matrix.adjoint()) : kInf);
            }
            t.update(err, {{"case", i}, {"system", params_json(p)}, {"channel", to_string(ch)}});
        }
    }
}

void suite_transitions_reconstruction(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto b = dressed_basis(p);
        const double window = p.tau + 2.0 * std::numbers::pi / p.OmegaR;
        for (auto ch : {Channel::Sigma1, Channel::Sigma3}) {
            const auto ops = transition_ops(p, ch);
            const auto s = b.to_dressed(coupling_operator(ch));
            double err = 0.0;
            for (int k = 0; k < 200; ++k) {
                const double time = window * k / 199.0;
                err = std::max(err, distance(fourier_reconstruct(ops, p.Omega, time), heisenberg_coupling(p, s, time)));
            }
            t.update(err, {{"case", i}, {"system", params_json(p)}, {"channel", to_string(ch)}});
        }
    }
}

void suite_transitions_decomposition(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        // Ω_R/Ω <= 0.2 keeps every candidate pair at least 0.05 Ω apart.
        const auto p = random_params(c.rng, 0.05, 0.2);
        const auto b = dressed_basis(p);
        for (auto ch : {Channel::Sigma1, Channel::Sigma3}) {
            const auto closed = transition_ops(p, ch);
            const auto numeric = numeric_decomposition_oracle(p, b.to_dressed(coupling_operator(ch)), 64, 16);
            double err = numeric.aliasing_warning ? kInf : 0.0;
            for (const auto& op : closed) {
                const auto* n = find_op(numeric.ops, op.q, op.bohr);
                err = std::max(err, n ? (n->matrix - op.matrix).matrix().cwiseAbs().maxCoeff()
                                      : op.matrix.matrix().cwiseAbs().maxCoeff());
            }
            for (const auto& n : numeric.ops) {
                if (!find_op(closed, n.q, n.bohr)) {
                    err = std::max(err, n.matrix.matrix().cwiseAbs().maxCoeff());
                }
            }
            t.update(err, {{"case", i}, {"system", params_json(p)}, {"channel", to_string(ch)}});
        }
    }
}

// ---- dissipator ------------------------------------------------------------

void suite_dissipator_kms(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const BathSpec bath{"b", Channel::Sigma1, c.rng.uniform(0.05, 5.0), random_density(c.rng, true)};
        const double w = c.rng.uniform(0.01, 5.0);
        const double expect = std::exp(-w / bath.temperature) * kms_density(bath, w);
        t.update(std::abs(kms_density(bath, -w) - expect) / std::max(kms_density(bath, w), 1e-300),
                 {{"case", i}, {"bath", serialize_bath(bath)}, {"omega", w}});
    }
}

struct Trajectory {
    double trace_err{0.0};
    double herm_err{0.0};
    double min_eig{kInf};
    json params;
};

// Raw (unvalidated) ρ(t) along 11 times in both pictures.
Trajectory random_trajectory(Rng& r, std::size_t i) {
    const auto p = random_params(r);
    const auto baths = random_baths(r);
    const auto gen = total_generator(p, baths);
    const auto rho0 = random_state(r, Basis::Dressed);
    const double t_end = r.uniform(1.0, 50.0);
    Trajectory tr;
    tr.params = {{"case", i}, {"system", params_json(p)}, {"baths", baths_json(baths)},
                 {"rho0", matrix_json(rho0)}, {"t_max", t_end}};
    const auto basis = dressed_basis(p);
    for (int k = 0; k <= 10; ++k) {
        const double time = t_end * k / 10.0;
        const auto rho_i = superop_exp(gen.total, time).apply(rho0);
        const auto u = propagator_dressed(p, basis, time);
        for (const auto& rho : {rho_i, u * rho_i * u.adjoint()}) {
            tr.trace_err = std::max(tr.trace_err, std::abs(rho.trace() - 1.0));
            tr.herm_err = std::max(tr.herm_err, distance(rho, rho.adjoint()));
            tr.min_eig = std::min(tr.min_eig, min_eigenvalue(Operator2(0.5 * (rho.matrix() + rho.matrix().adjoint()),
                                                                       Basis::Dressed)));
        }
    }
    return tr;
}

void suite_dissipator_trace(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto tr = random_trajectory(c.rng, i);
        t.update(tr.trace_err, tr.params);
    }
}

void suite_dissipator_hermiticity(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto tr = random_trajectory(c.rng, i);
        t.update(tr.herm_err, tr.params);
    }
}

void suite_dissipator_positivity(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto tr = random_trajectory(c.rng, i);
        t.update(std::max(0.0, -tr.min_eig), tr.params);
    }
}

void suite_dissipator_closed_form(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const double a = c.rng.uniform(0.1, 1.0);
        const auto gen = total_generator(p, {{"vacuum", Channel::Sigma1, 0.0, CubicDensity{a}}});
        const auto r = fluorescence_rates(p, a);
        const DensityMatrix rho0(random_state(c.rng, Basis::Dressed));
        const double time = c.rng.uniform(0.0, 5.0 / r.gamma1);
        const auto rho = evolve_interaction(gen, rho0, time);
        const double p11 = std::exp(-r.gamma1 * time) * rho0(0, 0).real() +
                           (r.delta_minus / r.gamma1) * (1.0 - std::exp(-r.gamma1 * time));
        const cplx c12 = std::exp(-r.gamma2 * time) * rho0(0, 1);
        t.update(std::max(std::abs(rho(0, 0) - p11), std::abs(rho(0, 1) - c12)),
                 {{"case", i}, {"system", params_json(p)}, {"A", a}, {"rho0", matrix_json(rho0.matrix())}, {"t", time}});
    }
}

void suite_dissipator_ode_interaction(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const double a = c.rng.uniform(0.1, 1.0);
        const auto gen = total_generator(p, {{"vacuum", Channel::Sigma1, 0.0, CubicDensity{a}}});
        const double time = 5.0 / fluorescence_rates(p, a).gamma1;
        const DensityMatrix rho0(random_state(c.rng, Basis::Dressed));
        const auto exact = evolve_interaction(gen, rho0, time).matrix();
        const auto ode = oracle::integrate_interaction(gen.total, rho0.matrix(), time, 4000);
        t.update(distance(exact, ode),
                 {{"case", i}, {"system", params_json(p)}, {"A", a}, {"rho0", matrix_json(rho0.matrix())}, {"t", time}});
    }
}

void suite_dissipator_ode_schrodinger(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        // Case 0 is the fluorescence setup at the reference parameters.
        const auto p = i == 0 ? reference_params() : random_params(c.rng);
        const auto baths = i == 0 ? std::vector<BathSpec>{{"vacuum", Channel::Sigma1, 0.0, CubicDensity{1.0}}}
                                  : random_baths(c.rng);
        const auto gen = total_generator(p, baths);
        const DensityMatrix rho0(random_state(c.rng, Basis::Dressed));
        const double time = 3.0 * p.tau;
        const auto exact = evolve_schrodinger(p, gen, rho0, time).matrix();
        const auto ode = oracle::integrate_schrodinger(p, gen.total, rho0.matrix(), time, 20000);
        t.update(distance(exact, ode), {{"case", i}, {"system", params_json(p)}, {"baths", baths_json(baths)},
                                        {"rho0", matrix_json(rho0.matrix())}, {"t", time}});
    }
}

void suite_dissipator_diagonal(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto baths = random_baths(c.rng);
        const auto gen = total_generator(p, baths);
        const auto rho = random_diagonal_state(c.rng);
        double err = 0.0;
        for (const auto& term : gen.terms) {
            const auto out = term.superop.apply(rho);
            err = std::max({err, std::abs(out(0, 1)), std::abs(out(1, 0))});
        }
        t.update(err, {{"case", i}, {"system", params_json(p)}, {"baths", baths_json(baths)},
                       {"rho", matrix_json(rho)}});
    }
}

void suite_dissipator_detailed_balance(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto baths = random_baths(c.rng, false);
        const auto gen = total_generator(p, baths);
        double err = 0.0;
        for (const auto& term : gen.terms) {
            if (term.op.bohr == 0) {
                continue;
            }
            const auto gibbs = local_gibbs_state(p, term, baths[term.bath_index]);
            err = std::max(err, term.superop.apply(gibbs).norm());
        }
        t.update(err, {{"case", i}, {"system", params_json(p)}, {"baths", baths_json(baths)}});
    }
}

void suite_dissipator_stationary(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto baths = random_baths(c.rng);
        const auto gen = total_generator(p, baths);
        const auto rho = stationary_state(gen);
        double err = gen.total.apply(rho.matrix()).norm();
        err = std::max({err, std::abs(rho(0, 1)), std::abs(rho(1, 0))});
        t.update(err, {{"case", i}, {"system", params_json(p)}, {"baths", baths_json(baths)}});
    }
}

void suite_dissipator_stationary_closed(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const double a = c.rng.uniform(0.1, 1.0);
        const auto fl = stationary_state(total_generator(p, {{"vacuum", Channel::Sigma1, 0.0, CubicDensity{a}}}));
        const auto r = fluorescence_rates(p, a);
        double err = std::abs(fl(0, 0).real() - r.delta_minus / r.gamma1);

        const auto hp = random_heatpump(c.rng);
        const auto rho = stationary_state(total_generator(hp.p, {hp.em, hp.deph}));
        const double ratio = heatpump_steady_ratio(heatpump_rates(hp.p, hp.em, hp.deph), hp.em.temperature,
                                                   hp.deph.temperature);
        err = std::max(err, std::abs((rho(0, 0) / rho(1, 1)).real() - ratio) / ratio);
        t.update(err, {{"case", i}, {"fluorescence", {{"system", params_json(p)}, {"A", a}}},
                       {"heatpump", heatpump_json(hp)}});
    }
}

void suite_dissipator_long_time(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const double a = c.rng.uniform(0.1, 1.0);
        const auto gen = total_generator(p, {{"vacuum", Channel::Sigma1, 0.0, CubicDensity{a}}});
        const DensityMatrix rho0(random_state(c.rng, Basis::Dressed));
        const double time = 50.0 / fluorescence_rates(p, a).gamma1;
        t.update(distance(evolve_interaction(gen, rho0, time).matrix(), stationary_state(gen).matrix()),
                 {{"case", i}, {"system", params_json(p)}, {"A", a}, {"rho0", matrix_json(rho0.matrix())}});
    }
}

void suite_dissipator_rates(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const double a = c.rng.uniform(0.1, 1.0);
        const auto r = fluorescence_rates(p, a);
        const double scale = std::max({1.0, r.gamma1, r.gamma2});
        double err = std::abs(r.gamma1 - (r.delta_minus + r.delta_plus)) / scale;
        err = std::max(err, std::abs(r.gamma2 - 0.5 * r.gamma1 - 0.5 * r.delta0) / scale);
        err = std::max(err, std::abs(coherence_decay_rate(total_generator(p, {{"v", Channel::Sigma1, 0.0,
                                                                                   CubicDensity{a}}})) -
                                     r.gamma2) / scale);
        t.update(err, {{"case", i}, {"system", params_json(p)}, {"A", a}});
    }
}

void suite_dissipator_phenomenological(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const double down = c.rng.uniform(0.0, 2.0), up = c.rng.uniform(0.0, 2.0), deph = c.rng.uniform(0.0, 2.0);
        const auto l = phenomenological_generator(down, up, deph);
        const auto rho = random_hermitian(c.rng, Basis::Lab);
        double err = std::abs(l.apply(rho).trace());
        // amplitude damping alone relaxes to |g><g|
        Mat2 g = Mat2::Zero();
        g(1, 1) = 1.0;
        err = std::max(err, phenomenological_generator(down + 0.1, 0.0, 0.0).apply(Operator2(g)).norm());
        t.update(err, {{"case", i}, {"gamma_down", down}, {"gamma_up", up}, {"dephasing", deph}});
    }
}

// ---- spectroscopy ----------------------------------------------------------

struct SpectrumCheck {
    SpectrumComparison cmp;
    json params;
};

SpectrumCheck reference_spectrum_check() {
    const auto p = reference_params();
    const auto gen = total_generator(p, {{"vacuum", Channel::Sigma1, 0.0, CubicDensity{1.0}}});
    const auto grid = uniform_grid(p.Omega - 4.0 * p.OmegaR, p.Omega + 4.0 * p.OmegaR, 2000);
    auto closed = mollow_spectrum(p, 1.0);
    sample_spectrum(closed, grid);
    const auto oracle = regression_spectrum_oracle(p, gen, grid, 120.0, 0.01);
    return {compare_spectra(closed, oracle), {{"system", params_json(p)}, {"A", 1.0}, {"points", 2000},
                                              {"t_max", 120.0}, {"dt", 0.01}}};
}

void suite_spectrum_oracle(Context&, Tracker& t) {
    const auto s = reference_spectrum_check();
    t.cases = 1;
    t.note = fmt::format("fitted scale {:.6g}", s.cmp.scale);
    t.update(s.cmp.relative_l2, s.params);
}

void suite_spectrum_elastic(Context&, Tracker& t) {
    const auto s = reference_spectrum_check();
    t.cases = 1;
    t.update(s.cmp.elastic_rel_error, s.params);
}

void suite_spectrum_elastic_vanishes(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const double omega = c.rng.uniform(0.5, 3.0);
        const double g = c.rng.uniform(0.02, 0.2) * omega;
        const auto p = make_params(omega, omega, g); // Δ = 0, flat G: δ₋ = δ₊
        const double level = c.rng.uniform(0.2, 1.0);
        const auto gen = total_generator(p, {{"flat", Channel::Sigma1, 0.0, FlatDensity{level}}});
        const double t_max = 60.0 / std::min(level * 0.5, coherence_decay_rate(gen));
        const auto o = regression_spectrum_oracle(p, gen, {p.Omega}, t_max, p.tau / 64.0);
        t.update(std::abs(o.elastic_weight), {{"case", i}, {"system", params_json(p)}, {"G", level}});
    }
}

void suite_spectrum_lines(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const double a = c.rng.uniform(0.1, 1.0);
        const auto s = mollow_spectrum(p, a);
        const auto r = fluorescence_rates(p, a);
        double err = std::abs(s.lines[0].center - s.lines[1].center - p.OmegaR);
        err = std::max(err, std::abs(s.lines[2].center - s.lines[0].center - p.OmegaR));
        err = std::max({err, std::abs(s.lines[0].width - r.gamma1), std::abs(s.lines[1].width - r.gamma2),
                        std::abs(s.lines[2].width - r.gamma2)});
        for (const auto& l : s.lines) {
            err = std::max(err, std::max(0.0, -l.weight));
        }
        err = std::max(err, std::max(0.0, -s.elastic_weight));
        const auto n = mollow_spectrum(p, a, true);
        err = std::max(err, std::abs(n.total_weight() - 1.0));
        t.update(err, {{"case", i}, {"system", params_json(p)}, {"A", a}});
    }
}

void suite_spectrum_kernels(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        std::vector<kernels::LorentzianLine> lines(3);
        for (auto& l : lines) {
            l = {c.rng.uniform(0.0, 2.0), c.rng.uniform(0.01, 0.5), c.rng.uniform(0.0, 1.0)};
        }
        const auto grid = uniform_grid(0.0, 2.0, 1000);
        std::vector<double> a(grid.size()), b(grid.size());
        kernels::lorentzian_sum_serial(lines, grid, a);
        kernels::lorentzian_sum_omp(lines, grid, b);
        double err = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            err = std::max(err, std::abs(a[j] - b[j]));
        }
        std::vector<cplx> f(3000);
        const double rate = c.rng.uniform(0.1, 1.0), freq = c.rng.uniform(0.0, 2.0);
        for (std::size_t k = 0; k < f.size(); ++k) {
            f[k] = std::exp(cplx(-rate, -freq) * (0.01 * static_cast<double>(k)));
        }
        kernels::damped_transform_serial(f, 0.01, grid, a);
        kernels::damped_transform_omp(f, 0.01, grid, b);
        for (std::size_t j = 0; j < a.size(); ++j) {
            err = std::max(err, std::abs(a[j] - b[j]));
        }
        t.update(err, {{"case", i}, {"rate", rate}, {"frequency", freq}});
    }
}

// ---- thermo ----------------------------------------------------------------

void suite_thermo_closed_forms(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto hp = random_heatpump(c.rng);
        const auto gen = total_generator(hp.p, {hp.em, hp.deph});
        const auto rho = stationary_state(gen);
        const double je = stationary_current(hp.p, gen, 0, rho);
        const double jd = stationary_current(hp.p, gen, 1, rho);
        const auto cf = heatpump_currents(heatpump_rates(hp.p, hp.em, hp.deph), hp.em.temperature, hp.deph.temperature);
        double err = std::max(rel(jd, cf.j_dephasing), rel(je, cf.j_em));
        err = std::max(err, cf.K > 0.0 ? 0.0 : kInf);
        t.update(err, merged(heatpump_json(hp), {{"case", i}}));
    }
}

// Both heat-pump configurations and general multi-bath ones, all at T > 0.
void suite_thermo_second_law(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto baths = random_baths(c.rng, false);
        const auto rep = thermo_report(p, total_generator(p, baths));
        double s = 0.0;
        for (const auto& cur : rep.currents) {
            s += cur.current / cur.temperature;
        }
        t.update(s, {{"case", i}, {"system", params_json(p)}, {"baths", baths_json(baths)}});
    }
}

void suite_thermo_spohn(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto baths = random_baths(c.rng);
        const auto gen = total_generator(p, baths);
        const auto rho_ss = stationary_state(gen).matrix();
        double worst = -kInf;
        for (int k = 0; k < 1000; ++k) {
            worst = std::max(worst, spohn_functional(gen.total, random_state(c.rng, Basis::Dressed), rho_ss));
        }
        t.update(worst, {{"case", i}, {"system", params_json(p)}, {"baths", baths_json(baths)}, {"states", 1000}});
    }
    t.note = "1000 random full-rank states per generator";
}

HeatPumpCase generic_heatpump() {
    return {make_params(10.1, 10.0, 0.5), {"em", Channel::Sigma1, 0.5, FlatDensity{1.0}},
            {"dephasing", Channel::Sigma3, 2.0, FlatDensity{0.5}}};
}

void suite_thermo_entropy_production(Context& c, Tracker& t) {
    const auto hp = generic_heatpump();
    const auto gen = total_generator(hp.p, {hp.em, hp.deph});
    std::vector<double> times;
    for (int k = 0; k <= 40; ++k) {
        times.push_back(0.5 * k);
    }
    for (std::size_t i = 0; i < c.cases; ++i) {
        const DensityMatrix rho0(random_state(c.rng, Basis::Dressed));
        const auto trace = entropy_production(hp.p, gen, rho0, times);
        double worst = 0.0;
        for (const auto& s : trace.samples) {
            worst = std::max(worst, -s.production);
        }
        t.update(worst, merged(heatpump_json(hp), {{"case", i}, {"rho0", matrix_json(rho0.matrix())}}));
    }
}

void suite_thermo_limit_cycle(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto hp = i == 0 ? generic_heatpump() : random_heatpump(c.rng);
        const auto gen = total_generator(hp.p, {hp.em, hp.deph});
        const auto rep = thermo_report(hp.p, gen);
        std::vector<double> times;
        for (int k = 0; k <= 16; ++k) {
            times.push_back(hp.p.tau * k / 16.0);
        }
        const auto trace = entropy_production(hp.p, gen, rep.rho, times);
        double err = 0.0;
        for (const auto& s : trace.samples) {
            err = std::max(err, std::abs(s.production - rep.entropy_rate));
        }
        err = std::max(err, std::max(0.0, -rep.entropy_rate));
        t.update(err, merged(heatpump_json(hp), {{"case", i}}));
    }
}

void suite_thermo_energy_balance(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto baths = random_baths(c.rng);
        const auto gen = total_generator(p, baths);
        const auto rep = thermo_report(p, gen);
        const auto basis = dressed_basis(p);
        const auto hbar = mean_hamiltonian_dressed(p);
        double err = std::abs(rep.power + [&] {
            double s = 0.0;
            for (const auto& cur : rep.currents) {
                s += cur.current;
            }
            return s;
        }());
        double e0 = 0.0;
        for (int k = 0; k <= 16; ++k) {
            const double time = p.tau * k / 16.0;
            const auto u = propagator_dressed(p, basis, time);
            const auto rho_t = u * rep.rho.matrix() * u.adjoint();
            // On the limit cycle every local current is time independent.
            std::vector<double> cur(baths.size(), 0.0);
            for (const auto& term : gen.terms) {
                cur[term.bath_index] += local_heat_current(p, term, rho_t, time);
            }
            for (std::size_t j = 0; j < baths.size(); ++j) {
                err = std::max(err, std::abs(cur[j] - rep.currents[j].current));
            }
            const double energy = (rho_t * u * hbar * u.adjoint()).trace().real();
            e0 = k == 0 ? energy : e0;
            err = std::max(err, std::abs(energy - e0));
        }
        t.update(err, {{"case", i}, {"system", params_json(p)}, {"baths", baths_json(baths)}});
    }
}

void suite_thermo_log_form(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        const auto baths = random_baths(c.rng, false);
        const auto gen = total_generator(p, baths);
        const auto rho = random_state(c.rng, Basis::Dressed);
        const double time = c.rng.uniform(0.0, 5.0 * p.tau);
        double err = 0.0;
        for (const auto& term : gen.terms) {
            if (term.op.bohr == 0) {
                err = std::max(err, std::abs(local_heat_current(p, term, rho, time)));
                continue;
            }
            const auto& bath = baths[term.bath_index];
            err = std::max(err, std::abs(local_heat_current(p, term, rho, time) -
                                         local_heat_current_log_form(p, term, bath, rho, time)));
            // The Schrödinger-picture local Gibbs state carries no current.
            const auto u = propagator_dressed(p, dressed_basis(p), time);
            const auto gibbs_t = u * local_gibbs_state(p, term, bath) * u.adjoint();
            err = std::max(err, std::abs(local_heat_current(p, term, gibbs_t, time)));
        }
        t.update(err, {{"case", i}, {"system", params_json(p)}, {"baths", baths_json(baths)},
                       {"rho", matrix_json(rho)}, {"t", time}});
    }
}

void suite_thermo_equal_temperature(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        auto hp = random_heatpump(c.rng);
        hp.deph.temperature = hp.em.temperature;
        const auto rep = thermo_report(hp.p, total_generator(hp.p, {hp.em, hp.deph}));
        const double temp = hp.em.temperature;
        const double err = std::max(std::abs(rep.entropy_rate - rep.power / temp), std::max(0.0, -rep.power));
        t.update(err, merged(heatpump_json(hp), {{"case", i}}));
    }
}

struct RegimeSweep {
    std::vector<SweepPoint> points;
    BathSpec em, deph;
    json params;
};

RegimeSweep regime_sweep() {
    const auto cfg = default_heatpump_config();
    const auto& sw = *cfg.heatpump->sweep;
    std::vector<double> deltas;
    for (std::size_t k = 0; k < sw.points; ++k) {
        deltas.push_back(sw.delta_min + (sw.delta_max - sw.delta_min) * static_cast<double>(k) /
                                            static_cast<double>(sw.points - 1));
    }
    RegimeSweep r{heatpump_sweep(cfg.system.Omega, cfg.system.g, cfg.baths[0], cfg.baths[1], deltas,
                                 cfg.heatpump->margin),
                  cfg.baths[0], cfg.baths[1], serialize_config(cfg)};
    return r;
}

void suite_thermo_regime_switch(Context&, Tracker& t) {
    const auto s = regime_sweep();
    double bad = 0.0;
    for (const auto& pt : s.points) {
        if (pt.Delta == 0.0) {
            continue;
        }
        const auto want = pt.Delta > 0.0 ? Regime::Cooling : Regime::Heating;
        bad += (pt.regime != want) + (pt.j_em >= 0.0) + !pt.j_dephasing_approx.has_value();
        ++t.cases;
    }
    t.update(bad, s.params);
    t.note = "count of points with wrong regime, J_e >= 0, or violated small-detuning conditions";
}

void suite_thermo_small_detuning(Context&, Tracker& t) {
    const auto cfg = default_heatpump_config();
    for (double delta : {-0.025, 0.025}) {
        const auto p = make_params(cfg.system.Omega + delta, cfg.system.Omega, cfg.system.g);
        const auto gen = total_generator(p, cfg.baths);
        const double jd = stationary_current(p, gen, 1);
        const double approx = small_detuning_currents(p, cfg.baths[0], cfg.baths[1], cfg.heatpump->margin).j_dephasing;
        t.update(std::abs(jd - approx) / std::abs(approx), {{"config", serialize_config(cfg)}, {"Delta", delta}});
        ++t.cases;
    }
}

void suite_thermo_sign_structure(Context& c, Tracker& t) {
    for (std::size_t i = 0; i < c.cases; ++i) {
        const double omega = c.rng.uniform(10.0, 30.0);
        const double te = c.rng.uniform(0.2, 1.0) * omega / 10.0;
        const double td = c.rng.uniform(0.2, 1.0) * omega / 10.0;
        const double omega_r = c.rng.uniform(0.1, 1.0) * td / 10.0;
        const double theta = c.rng.uniform(0.1, std::numbers::pi - 0.1);
        const auto p = make_params(omega + omega_r * std::cos(theta), omega, 0.5 * omega_r * std::sin(theta));
        const BathSpec em{"em", Channel::Sigma1, te, random_density(c.rng, true)};
        const BathSpec deph{"dephasing", Channel::Sigma3, td, random_density(c.rng, true)};
        const auto s = small_detuning_currents(p, em, deph);
        const double bad = (s.D > 0.0 ? 0.0 : 1.0) + (s.j_em < 0.0 ? 0.0 : 1.0) +
                           ((p.Delta > 0.0) == (s.j_dephasing > 0.0) ? 0.0 : 1.0);
        t.update(bad, {{"case", i}, {"system", params_json(p)}, {"baths", baths_json({em, deph})}});
    }
}

// ---- cli -------------------------------------------------------------------

void suite_config_roundtrip(Context& c, Tracker& t) {
    std::vector<RunConfig> configs = {default_spectrum_config(), default_heatpump_config(), default_evolve_config(),
                                      default_verify_config()};
    for (std::size_t i = 0; i < c.cases; ++i) {
        const auto p = random_params(c.rng);
        RunConfig cfg;
        cfg.system = {p.omega0, p.Omega, p.g};
        cfg.baths = random_baths(c.rng);
        cfg.baths.push_back({"tab", Channel::Sigma3, c.rng.uniform(0.0, 2.0),
                             TabulatedDensity{{0.0, c.rng.uniform(0.5, 1.0), 2.0}, {0.0, c.rng.uniform(), 1.0}}});
        cfg.spectrum = SpectrumConfig{c.rng.uniform(0.0, 1.0), c.rng.uniform(1.0, 2.0),
                                      static_cast<std::size_t>(c.rng.uniform(0.0, 5000.0)), c.rng.coin()};
        if (c.rng.coin()) {
            cfg.heatpump = HeatPumpConfig{SweepConfig{-c.rng.uniform(), c.rng.uniform(), 7}, c.rng.uniform(1.0, 20.0)};
        }
        cfg.verify = VerifyConfig{static_cast<std::uint64_t>(c.rng.uniform(0.0, 1e15)), 3, 1e-3, {{"algebra.lgks", 1e-9}}};
        configs.push_back(cfg);
    }
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto text = serialize_config(configs[i]).dump();
        const auto back = parse_config_text(text);
        const bool ok = back == configs[i] && serialize_config(back).dump() == text;
        t.update(ok ? 0.0 : 1.0, {{"case", i}, {"config", json::parse(text)}});
    }
    t.cases = configs.size();
}

// ---- registry --------------------------------------------------------------

struct SuiteDef {
    const char* name;
    std::size_t default_cases; // 0: fixed-size suite, ignores the cases override
    double tolerance;
    void (*body)(Context&, Tracker&);
};

const std::vector<SuiteDef>& registry() {
    static const std::vector<SuiteDef> suites = {
        {"algebra.lgks", 100, 1e-12, suite_algebra_lgks},
        {"algebra.group_law", 100, 1e-12, suite_algebra_group_law},
        {"algebra.pauli_roundtrip", 100, 1e-14, suite_algebra_pauli},
        {"algebra.vectorize_roundtrip", 100, 0.0, suite_algebra_vectorize},
        {"floquet.propagator_oracle", 0, 1e-8, suite_floquet_oracle},
        {"floquet.convergence_order", 0, 0.0, suite_floquet_order},
        {"floquet.unitarity", 100, 1e-12, suite_floquet_unitarity},
        {"floquet.periodicity", 100, 1e-10, suite_floquet_periodicity},
        {"floquet.dressed_basis", 100, 1e-12, suite_floquet_dressed},
        {"transitions.commutation", 100, 1e-12, suite_transitions_commutation},
        {"transitions.reconstruction", 50, 1e-10, suite_transitions_reconstruction},
        {"transitions.decomposition", 50, 1e-7, suite_transitions_decomposition},
        {"dissipator.kms", 100, 1e-12, suite_dissipator_kms},
        {"dissipator.trace", 100, 1e-12, suite_dissipator_trace},
        {"dissipator.hermiticity", 100, 1e-12, suite_dissipator_hermiticity},
        {"dissipator.positivity", 100, 1e-10, suite_dissipator_positivity},
        {"dissipator.closed_form", 100, 1e-10, suite_dissipator_closed_form},
        {"dissipator.ode_interaction", 10, 1e-9, suite_dissipator_ode_interaction},
        {"dissipator.ode_schrodinger", 5, 1e-8, suite_dissipator_ode_schrodinger},
        {"dissipator.diagonal", 100, 1e-14, suite_dissipator_diagonal},
        {"dissipator.detailed_balance", 100, 1e-12, suite_dissipator_detailed_balance},
        {"dissipator.stationary", 100, 1e-12, suite_dissipator_stationary},
        {"dissipator.stationary_closed_form", 100, 1e-12, suite_dissipator_stationary_closed},
        {"dissipator.long_time", 20, 1e-8, suite_dissipator_long_time},
        {"dissipator.rates", 100, 1e-12, suite_dissipator_rates},
        {"dissipator.phenomenological", 100, 1e-13, suite_dissipator_phenomenological},
        {"spectroscopy.regression_oracle", 0, 1e-3, suite_spectrum_oracle},
        {"spectroscopy.elastic_weight", 0, 1e-3, suite_spectrum_elastic},
        {"spectroscopy.elastic_vanishes", 4, 1e-20, suite_spectrum_elastic_vanishes},
        {"spectroscopy.line_structure", 100, 1e-12, suite_spectrum_lines},
        {"spectroscopy.kernels", 10, 1e-12, suite_spectrum_kernels},
        {"thermo.closed_forms", 200, 1e-12, suite_thermo_closed_forms},
        {"thermo.second_law", 200, 1e-10, suite_thermo_second_law},
        {"thermo.spohn", 20, 1e-10, suite_thermo_spohn},
        {"thermo.entropy_production", 100, 1e-10, suite_thermo_entropy_production},
        {"thermo.limit_cycle", 10, 1e-10, suite_thermo_limit_cycle},
        {"thermo.energy_balance", 50, 1e-8, suite_thermo_energy_balance},
        {"thermo.log_form", 100, 1e-10, suite_thermo_log_form},
        {"thermo.equal_temperature", 100, 1e-10, suite_thermo_equal_temperature},
        {"thermo.regime_switch", 0, 0.0, suite_thermo_regime_switch},
        {"thermo.small_detuning", 0, 0.05, suite_thermo_small_detuning},
        {"thermo.sign_structure", 100, 0.0, suite_thermo_sign_structure},
        {"cli.config_roundtrip", 20, 0.0, suite_config_roundtrip},
    };
    return suites;
}

const SuiteDef& find_suite(const std::string& name) {
    for (const auto& s : registry()) {
        if (name == s.name) {
            return s;
        }
    }
    throw InvalidArgument(fmt::format("verify: unknown suite '{}'", name));
}

} // namespace

bool VerifyReport::all_passed() const {
    for (const auto& s : suites) {
        if (!s.passed) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> out;
    for (const auto& s : registry()) {
        out.emplace_back(s.name);
    }
    return out;
}

SuiteResult run_verify_suite(const std::string& name, const VerifyConfig& cfg) {
    const auto& def = find_suite(name);
    for (const auto& [key, value] : cfg.tolerances) {
        find_suite(key);
    }
    Context ctx{Rng(mix_seed(cfg.seed, name)), def.default_cases};
    if (def.default_cases > 0 && cfg.cases) {
        ctx.cases = *cfg.cases;
    }
    SuiteResult res;
    res.suite = name;
    res.tolerance = def.tolerance;
    if (cfg.tolerance) {
        res.tolerance = *cfg.tolerance;
    }
    if (auto it = cfg.tolerances.find(name); it != cfg.tolerances.end()) {
        res.tolerance = it->second;
    }
    Tracker t;
    try {
        def.body(ctx, t);
        res.cases = t.cases ? t.cases : ctx.cases;
        res.max_error = t.worst.is_null() ? 0.0 : t.max_error;
        res.worst_case = t.worst;
        res.note = t.note;
        res.passed = std::isfinite(res.max_error) && res.max_error <= res.tolerance;
    } catch (const std::exception& e) {
        res.cases = t.cases ? t.cases : ctx.cases;
        res.max_error = kInf;
        res.worst_case = t.worst;
        res.note = fmt::format("exception: {}", e.what());
        res.passed = false;
    }
    return res;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.seed = cfg.seed;
    for (const auto& [key, value] : cfg.tolerances) {
        find_suite(key);
    }
    for (const auto& s : registry()) {
        rep.suites.push_back(run_verify_suite(s.name, cfg));
    }
    return rep;
}

std::string verify_report_csv(const VerifyReport& report) {
    CsvTable t({"suite", "cases", "max_error", "tolerance", "status"});
    for (const auto& s : report.suites) {
        t.add_row({s.suite, static_cast<long long>(s.cases), s.max_error, s.tolerance,
                   std::string(s.passed ? "PASS" : "FAIL")});
    }
    return t.str();
}

json verify_failures_json(const VerifyReport& report) {
    json out = {{"seed", report.seed}, {"failures", json::array()}};
    for (const auto& s : report.suites) {
        if (s.passed) {
            continue;
        }
        out["failures"].push_back({{"suite", s.suite},
                                   {"max_error", std::isfinite(s.max_error) ? json(s.max_error) : json("inf")},
                                   {"tolerance", s.tolerance},
                                   {"note", s.note},
                                   {"worst_case", s.worst_case}});
    }
    return out;
}

} // namespace ftls
