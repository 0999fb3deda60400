// dissipator.cpp — Bath spectral densities, Floquet LGKS generators, evolution and stationary states

#include "ftls/dissipator.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>
#include <fmt/format.h>

#include "ftls/errors.hpp"

namespace ftls {

namespace {
constexpr double kKernelThreshold = 1e-10;
constexpr double kPositivityTol = 1e-10;
} // namespace

double TabulatedDensity::operator()(double omega) const {
    if (omegas.empty() || omega < omegas.front() || omega > omegas.back()) {
        return 0.0;
    }
    const auto it = std::upper_bound(omegas.begin(), omegas.end(), omega);
    if (it == omegas.end()) {
        return values.back();
    }
    const auto i = static_cast<std::size_t>(it - omegas.begin());
    const double x0 = omegas[i - 1], x1 = omegas[i];
    const double w = (omega - x0) / (x1 - x0);
    return (1.0 - w) * values[i - 1] + w * values[i];
}

double evaluate_density(const SpectralDensity& g, double omega) {
    return std::visit([omega](const auto& d) { return d(omega); }, g);
}

double kms_density(const BathSpec& bath, double omega) {
    if (omega > 0.0) {
        return evaluate_density(bath.density, omega);
    }
    if (omega == 0.0) {
        // Flat extension G(0⁺); only reachable in degenerate parameter corners.
        return evaluate_density(bath.density, 0.0);
    }
    if (bath.temperature <= 0.0) {
        return 0.0;
    }
    return std::exp(omega / bath.temperature) * evaluate_density(bath.density, -omega);
}

RateSet fluorescence_rates(const SystemParams& p, double A) {
    if (!(A > 0.0)) {
        throw InvalidArgument("fluorescence_rates: A must be positive");
    }
    const CubicDensity g{A};
    const double r = p.OmegaR;
    RateSet s;
    s.delta0 = std::pow(2.0 * p.g / r, 2) * g(p.Omega);
    s.delta_plus = std::pow((r + p.Delta) / (2.0 * r), 2) * g(p.Omega + r);
    s.delta_minus = std::pow((r - p.Delta) / (2.0 * r), 2) * g(p.Omega - r);
    s.gamma1 = s.delta_minus + s.delta_plus;
    s.gamma2 = 0.5 * (s.delta_minus + s.delta_plus + s.delta0);
    return s;
}

DensityMatrix::DensityMatrix(const Operator2& m) : m_(m) {
    const double herm = (m.matrix() - m.matrix().adjoint()).norm();
    const double tr = std::abs(m.trace() - 1.0);
    if (herm > kAlgebraicTol || tr > kAlgebraicTol) {
        throw InvalidArgument(fmt::format("not a density matrix: Hermiticity defect {:.3g}, trace defect {:.3g}",
                                          herm, tr));
    }
    const double lmin = min_eigenvalue(Operator2(0.5 * (m.matrix() + m.matrix().adjoint()), m.basis()));
    if (lmin < -kPositivityTol) {
        throw InvalidArgument(fmt::format("not a density matrix: eigenvalue {:.3g}", lmin));
    }
}

std::vector<TransitionOperator> generator_representatives(const std::vector<TransitionOperator>& ops) {
    std::vector<TransitionOperator> reps;
    for (const auto& op : ops) {
        if (op.bohr > 0 || (op.bohr == 0 && op.q >= 0)) {
            reps.push_back(op);
        }
    }
    return reps;
}

SuperOp local_generator(const TransitionOperator& s, const BathSpec& bath, const SystemParams& p) {
    if (s.channel != bath.channel) {
        throw InvalidArgument(fmt::format("transition operator of the {} channel used with bath '{}' coupled via {}",
                                          to_string(s.channel), bath.label, to_string(bath.channel)));
    }
    if (s.bohr < 0 || (s.bohr == 0 && s.q < 0)) {
        throw InvalidArgument("local_generator expects the omega_bar >= 0 representative of a conjugate pair");
    }
    const double nu = s.combined_frequency(p.Omega);
    const double up = kms_density(bath, nu);
    const double down = kms_density(bath, -nu);
    if (!(up >= 0.0) || !(down >= 0.0)) {
        throw InvalidArgument(fmt::format("bath '{}' has a negative spectral density at {:.6g}", bath.label, nu));
    }
    if (s.q == 0 && s.bohr == 0) {
        return lindblad_superop(s.matrix, up);
    }
    return lindblad_superop(s.matrix, up) + lindblad_superop(s.matrix.adjoint(), down);
}

Generator total_generator(const SystemParams& p, const std::vector<BathSpec>& baths) {
    Generator gen;
    gen.baths = baths;
    for (std::size_t j = 0; j < baths.size(); ++j) {
        const auto& bath = baths[j];
        const auto ops = transition_ops(p, bath.channel, bath.label);
        check_frequency_collisions(ops, p.Omega);
        for (const auto& op : generator_representatives(ops)) {
            LocalTerm term;
            term.bath_index = j;
            term.op = op;
            const double nu = op.combined_frequency(p.Omega);
            term.rate_forward = kms_density(bath, nu);
            term.rate_backward = (op.q == 0 && op.bohr == 0) ? 0.0 : kms_density(bath, -nu);
            term.superop = local_generator(op, bath, p);
            gen.total += term.superop;
            gen.terms.push_back(std::move(term));
        }
    }
    return gen;
}

DensityMatrix evolve_interaction(const Generator& l, const DensityMatrix& rho0, double t) {
    if (t < 0.0) {
        throw InvalidArgument("evolve_interaction: t must be >= 0");
    }
    return DensityMatrix(superop_exp(l.total, t).apply(rho0.matrix()));
}

DensityMatrix evolve_schrodinger(const SystemParams& p, const Generator& l, const DensityMatrix& rho0, double t) {
    const auto rho_i = evolve_interaction(l, rho0, t);
    const auto u = propagator_dressed(p, dressed_basis(p), t);
    return DensityMatrix(u * rho_i.matrix() * u.adjoint());
}

Operator2 schrodinger_generator_apply(const SystemParams& p, const SuperOp& l, const Operator2& rho, double t) {
    const auto u = propagator_dressed(p, dressed_basis(p), t);
    return u * l.apply(u.adjoint() * rho * u) * u.adjoint();
}

DensityMatrix stationary_state(const Generator& l) {
    Eigen::JacobiSVD<Mat4> svd(l.total.matrix(), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int kernel_dim = 0;
    for (int i = 0; i < 4; ++i) {
        if (sv(i) <= kKernelThreshold * sv(0)) {
            ++kernel_dim;
        }
    }
    if (sv(0) == 0.0) {
        kernel_dim = 4;
    }
    if (kernel_dim != 1) {
        throw DegeneracyError(fmt::format(
            "generator has a {}-dimensional kernel (singular values {:.3g}, {:.3g}, {:.3g}, {:.3g}); "
            "the stationary state is not unique",
            kernel_dim, sv(0), sv(1), sv(2), sv(3)));
    }
    Operator2 rho = devectorize(svd.matrixV().col(3), l.total.basis());
    rho = (1.0 / rho.trace()) * rho;
    rho = 0.5 * (rho + rho.adjoint());
    return DensityMatrix(rho);
}

SuperOp phenomenological_generator(double gamma_down, double gamma_up, double dephasing) {
    if (gamma_down < 0.0 || gamma_up < 0.0 || dephasing < 0.0) {
        throw InvalidArgument("phenomenological_generator: rates must be non-negative");
    }
    // -(δ/2)[σ³,[σ³,ρ]] = δ(σ³ρσ³ - ρ) = δ D[σ³]ρ
    return lindblad_superop(sigma_minus(), gamma_down) + lindblad_superop(sigma_plus(), gamma_up) +
           lindblad_superop(sigma3(), dephasing);
}

} // namespace ftls
