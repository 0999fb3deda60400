// oracles.cpp — Fixed-step RK4 reference integrators used to check the closed forms

#include "ftls/oracles.hpp"

#include "ftls/errors.hpp"

namespace ftls::oracle {

namespace {

constexpr cplx I{0.0, 1.0};

template <typename State, typename Rhs>
State rk4(State y, double t0, double t, int steps, Rhs&& f) {
    if (steps < 1) {
        throw InvalidArgument("RK4 oracle: steps must be >= 1");
    }
    const double h = (t - t0) / steps;
    for (int n = 0; n < steps; ++n) {
        const double s = t0 + n * h;
        const State k1 = f(s, y);
        const State k2 = f(s + 0.5 * h, State(y + 0.5 * h * k1));
        const State k3 = f(s + 0.5 * h, State(y + 0.5 * h * k2));
        const State k4 = f(s + h, State(y + h * k3));
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
}

} // namespace

Operator2 integrate_interaction(const SuperOp& l, const Operator2& rho0, double t, int steps) {
    require_same_basis(l.basis(), rho0.basis(), "integrate_interaction");
    const Mat4& m = l.matrix();
    const Vec4 v = rk4(vectorize(rho0), 0.0, t, steps, [&](double, const Vec4& y) -> Vec4 { return m * y; });
    return devectorize(v, rho0.basis());
}

Operator2 integrate_schrodinger(const SystemParams& p, const SuperOp& l, const Operator2& rho0, double t, int steps) {
    require_same_basis(l.basis(), Basis::Dressed, "integrate_schrodinger");
    const auto basis = dressed_basis(p);
    const Mat2 v = basis.change_of_basis();
    const Mat2 lab0 = v * rho0.matrix() * v.adjoint();
    auto rhs = [&](double s, const Mat2& rho) -> Mat2 {
        const Mat2 h = lab_hamiltonian(p, s).matrix();
        const Mat2 u = propagator(p, s).matrix();
        // lab -> interaction-picture dressed coordinates, apply L, and back
        const Mat2 rho_i = v.adjoint() * u.adjoint() * rho * u * v;
        const Mat2 lr = l.apply(Operator2(rho_i, Basis::Dressed)).matrix();
        return -I * (h * rho - rho * h) + u * v * lr * v.adjoint() * u.adjoint();
    };
    const Mat2 lab_t = rk4(lab0, 0.0, t, steps, rhs);
    return Operator2(v.adjoint() * lab_t * v, Basis::Dressed);
}

double integrate_population(double rate_out, double rate_in, double p1_0, double t, int steps) {
    return rk4(p1_0, 0.0, t, steps,
               [&](double, double y) { return -rate_out * y + rate_in * (1.0 - y); });
}

} // namespace ftls::oracle
