// transitions.cpp — Floquet–Fourier transition operators of the σ¹ and σ³ couplings

#include "ftls/transitions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "ftls/errors.hpp"

namespace ftls {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kCollisionTol = 1e-9;
constexpr double kOracleDropThreshold = 1e-8;
constexpr int kOracleMaxHarmonic = 2;

Operator2 dressed(cplx m00, cplx m01, cplx m10, cplx m11) {
    Mat2 m;
    m << m00, m01, m10, m11;
    return Operator2(m, Basis::Dressed);
}

TransitionOperator make_op(const SystemParams& p, Operator2 m, int q, int k, Channel c, const std::string& bath) {
    TransitionOperator op;
    op.matrix = std::move(m);
    op.q = q;
    op.bohr = k;
    op.omega_bar = k * p.OmegaR;
    op.channel = c;
    op.bath = bath;
    return op;
}

TransitionOperator conjugate(const SystemParams& p, const TransitionOperator& op) {
    return make_op(p, op.matrix.adjoint(), -op.q, -op.bohr, op.channel, op.bath);
}

} // namespace

std::string_view to_string(Channel c) {
    return c == Channel::Sigma1 ? "sigma1" : "sigma3";
}

Operator2 coupling_operator(Channel c) {
    return c == Channel::Sigma1 ? sigma1() : sigma3();
}

std::vector<TransitionOperator> sigma1_transition_ops(const SystemParams& p, const std::string& bath) {
    const double r = p.OmegaR;
    const double a = (p.Delta - r) / (2.0 * r);
    const double b = (p.Delta + r) / (2.0 * r);
    const double c = p.g / r;
    std::vector<TransitionOperator> ops;
    ops.push_back(make_op(p, dressed(0, a, 0, 0), 1, -1, Channel::Sigma1, bath)); // S¹(Ω - Ω_R)
    ops.push_back(make_op(p, dressed(c, 0, 0, -c), 1, 0, Channel::Sigma1, bath)); // S¹(Ω)
    ops.push_back(make_op(p, dressed(0, 0, b, 0), 1, 1, Channel::Sigma1, bath));  // S¹(Ω + Ω_R)
    for (int i = 0; i < 3; ++i) {
        ops.push_back(conjugate(p, ops[i]));
    }
    return ops;
}

std::vector<TransitionOperator> sigma3_transition_ops(const SystemParams& p, const std::string& bath) {
    const double r = p.OmegaR;
    std::vector<TransitionOperator> ops;
    ops.push_back(make_op(p, dressed(p.Delta / r, 0, 0, -p.Delta / r), 0, 0, Channel::Sigma3, bath));
    ops.push_back(make_op(p, dressed(0, 0, -2.0 * p.g / r, 0), 0, 1, Channel::Sigma3, bath));
    ops.push_back(conjugate(p, ops[1]));
    return ops;
}

std::vector<TransitionOperator> transition_ops(const SystemParams& p, Channel c, const std::string& bath) {
    return c == Channel::Sigma1 ? sigma1_transition_ops(p, bath) : sigma3_transition_ops(p, bath);
}

void check_frequency_collisions(const std::vector<TransitionOperator>& ops, double Omega) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            const auto& x = ops[i];
            const auto& y = ops[j];
            const double nx = x.combined_frequency(Omega);
            const double ny = y.combined_frequency(Omega);
            const bool conj_pair = x.q == -y.q && x.bohr == -y.bohr;
            const bool same_exponent = std::abs(nx - ny) < kCollisionTol;
            const bool same_magnitude = std::abs(std::abs(nx) - std::abs(ny)) < kCollisionTol;
            if (same_exponent || (!conj_pair && same_magnitude)) {
                throw DegeneracyError(fmt::format(
                    "frequency collision in {} channel: (q={}, k={}) and (q={}, k={}) share combined frequency "
                    "{:.17g} vs {:.17g}; quasifrequencies must be nondegenerate",
                    to_string(x.channel), x.q, x.bohr, y.q, y.bohr, nx, ny));
            }
        }
    }
}

Operator2 heisenberg_coupling(const SystemParams& p, const Operator2& s, double t) {
    require_same_basis(s.basis(), Basis::Dressed, "heisenberg_coupling");
    const auto u = propagator_dressed(p, dressed_basis(p), t);
    return u.adjoint() * s * u;
}

Operator2 fourier_reconstruct(const std::vector<TransitionOperator>& ops, double Omega, double t) {
    Operator2 sum = Operator2::zero(Basis::Dressed);
    for (const auto& op : ops) {
        sum += std::exp(-I * op.combined_frequency(Omega) * t) * op.matrix;
    }
    return sum;
}

DecompositionResult numeric_decomposition_oracle(const SystemParams& p, const Operator2& s, int n_periods,
                                                 int samples_per_period) {
    require_same_basis(s.basis(), Basis::Dressed, "numeric_decomposition_oracle");
    // Highest candidate frequency is 2Ω + 2Ω_R <= 4Ω; Nyquist needs > 8 samples per period.
    if (n_periods < 1 || samples_per_period <= 8) {
        throw InvalidArgument("numeric_decomposition_oracle: need n_periods >= 1 and samples_per_period > 8");
    }
    struct Candidate {
        int q, k;
        double nu;
    };
    std::vector<Candidate> cands;
    for (int q = -kOracleMaxHarmonic; q <= kOracleMaxHarmonic; ++q)
        for (int k = -kOracleMaxHarmonic; k <= kOracleMaxHarmonic; ++k)
            cands.push_back({q, k, q * p.Omega + k * p.OmegaR});

    DecompositionResult out;
    const double window = n_periods * p.tau;
    out.resolution = 2.0 * std::numbers::pi / window;
    out.min_separation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            out.min_separation = std::min(out.min_separation, std::abs(cands[i].nu - cands[j].nu));
    out.aliasing_warning = out.min_separation < 2.0 * out.resolution;

    const auto basis = dressed_basis(p);
    const int n = n_periods * samples_per_period;
    const int m = static_cast<int>(cands.size());
    Eigen::MatrixXcd design(n, m);
    Eigen::MatrixXcd rhs(n, 4);
    for (int row = 0; row < n; ++row) {
        const double t = row * p.tau / samples_per_period;
        for (int col = 0; col < m; ++col) {
            design(row, col) = std::exp(-I * cands[col].nu * t);
        }
        const auto u = propagator_dressed(p, basis, t);
        const Mat2 st = (u.adjoint() * s * u).matrix();
        rhs(row, 0) = st(0, 0);
        rhs(row, 1) = st(1, 0);
        rhs(row, 2) = st(0, 1);
        rhs(row, 3) = st(1, 1);
    }
    const Eigen::MatrixXcd coef = design.colPivHouseholderQr().solve(rhs);
    for (int col = 0; col < m; ++col) {
        const Eigen::Vector4cd v = coef.row(col).transpose();
        if (v.cwiseAbs().maxCoeff() < kOracleDropThreshold) {
            continue;
        }
        TransitionOperator op;
        op.matrix = devectorize(v, Basis::Dressed);
        op.q = cands[col].q;
        op.bohr = cands[col].k;
        op.omega_bar = cands[col].k * p.OmegaR;
        out.ops.push_back(std::move(op));
    }
    return out;
}

} // namespace ftls
