// algebra.cpp — 2x2 operators and 4x4 superoperators with basis tagging

#include "ftls/algebra.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "ftls/errors.hpp"

namespace ftls {

namespace {
constexpr cplx I{0.0, 1.0};
constexpr double kExpCondLimit = 1e12;
} // namespace

std::string_view to_string(Basis b) {
    return b == Basis::Lab ? "lab" : "dressed";
}

void require_same_basis(Basis a, Basis b, std::string_view what) {
    if (a != b) {
        throw BasisMismatch(std::string(what) + ": mixing " + std::string(to_string(a)) + " and " +
                            std::string(to_string(b)) + " basis operands");
    }
}

bool Operator2::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).norm() <= tol * std::max(1.0, m_.norm());
}

Operator2& Operator2::operator+=(const Operator2& o) {
    require_same_basis(basis_, o.basis_, "Operator2 +");
    m_ += o.m_;
    return *this;
}

Operator2& Operator2::operator-=(const Operator2& o) {
    require_same_basis(basis_, o.basis_, "Operator2 -");
    m_ -= o.m_;
    return *this;
}

Operator2 operator*(const Operator2& a, const Operator2& b) {
    require_same_basis(a.basis_, b.basis_, "Operator2 *");
    return Operator2(a.m_ * b.m_, a.basis_);
}

Operator2 commutator(const Operator2& a, const Operator2& b) {
    return a * b - b * a;
}

double distance(const Operator2& a, const Operator2& b) {
    return (a - b).norm();
}

Operator2 sigma1() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return Operator2(m);
}

Operator2 sigma2() {
    Mat2 m;
    m << 0, -I, I, 0;
    return Operator2(m);
}

Operator2 sigma3() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return Operator2(m);
}

Operator2 sigma_plus() {
    return 0.5 * (sigma1() + I * sigma2());
}

Operator2 sigma_minus() {
    return 0.5 * (sigma1() - I * sigma2());
}

PauliCoefficients pauli_decompose(const Operator2& m) {
    const Mat2& a = m.matrix();
    return {0.5 * (a(0, 0) + a(1, 1)),
            0.5 * (a(0, 1) + a(1, 0)),
            0.5 * I * (a(0, 1) - a(1, 0)),
            0.5 * (a(0, 0) - a(1, 1))};
}

Operator2 pauli_reconstruct(const PauliCoefficients& c, Basis basis) {
    Mat2 m;
    m << c.c0 + c.c3, c.c1 - I * c.c2, c.c1 + I * c.c2, c.c0 - c.c3;
    return Operator2(m, basis);
}

Operator2 expm_hermitian(const Operator2& h, double t) {
    if (!h.is_hermitian()) {
        throw InvalidArgument("expm_hermitian: input is not Hermitian");
    }
    const auto c = pauli_decompose(h);
    const double n1 = c.c1.real(), n2 = c.c2.real(), n3 = c.c3.real();
    const double n = std::sqrt(n1 * n1 + n2 * n2 + n3 * n3);
    const cplx phase = std::exp(-I * c.c0.real() * t);
    if (n == 0.0) {
        return phase * Operator2::identity(h.basis());
    }
    const double cs = std::cos(n * t);
    const double sn = std::sin(n * t) / n;
    const PauliCoefficients u{cs, -I * sn * n1, -I * sn * n2, -I * sn * n3};
    return phase * pauli_reconstruct(u, h.basis());
}

HermitianEigen hermitian_eigen(const Operator2& h) {
    Eigen::SelfAdjointEigenSolver<Mat2> es(h.matrix());
    return {{es.eigenvalues()(0), es.eigenvalues()(1)}, es.eigenvectors()};
}

Operator2 log_hermitian(const Operator2& h, double floor) {
    const auto e = hermitian_eigen(h);
    Eigen::Vector2cd logs(std::log(std::max(e.values[0], floor)), std::log(std::max(e.values[1], floor)));
    return Operator2(e.vectors * logs.asDiagonal() * e.vectors.adjoint(), h.basis());
}

double von_neumann_entropy(const Operator2& rho, double floor) {
    const auto e = hermitian_eigen(rho);
    double s = 0.0;
    for (double p : e.values) {
        const double q = std::max(p, floor);
        s -= q * std::log(q);
    }
    return s;
}

double min_eigenvalue(const Operator2& h) {
    return hermitian_eigen(h).values[0];
}

Vec4 vectorize(const Operator2& rho) {
    const Mat2& m = rho.matrix();
    return Vec4(m(0, 0), m(1, 0), m(0, 1), m(1, 1));
}

Operator2 devectorize(const Vec4& v, Basis basis) {
    Mat2 m;
    m << v(0), v(2), v(1), v(3);
    return Operator2(m, basis);
}

Operator2 SuperOp::apply(const Operator2& rho) const {
    require_same_basis(basis_, rho.basis(), "SuperOp::apply");
    return devectorize(m_ * vectorize(rho), basis_);
}

SuperOp& SuperOp::operator+=(const SuperOp& o) {
    require_same_basis(basis_, o.basis_, "SuperOp +");
    m_ += o.m_;
    return *this;
}

SuperOp operator*(const SuperOp& a, const SuperOp& b) {
    require_same_basis(a.basis_, b.basis_, "SuperOp *");
    return SuperOp(a.m_ * b.m_, a.basis_);
}

namespace {
Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return k;
}
} // namespace

SuperOp sandwich_superop(const Operator2& a, const Operator2& b) {
    require_same_basis(a.basis(), b.basis(), "sandwich_superop");
    return SuperOp(kron(b.matrix().transpose(), a.matrix()), a.basis());
}

SuperOp conjugation_superop(const Operator2& u) {
    return sandwich_superop(u, u.adjoint());
}

SuperOp hamiltonian_superop(const Operator2& h) {
    const auto id = Operator2::identity(h.basis());
    const Mat4 m = sandwich_superop(h, id).matrix() - sandwich_superop(id, h).matrix();
    return SuperOp(-I * m, h.basis());
}

SuperOp lindblad_superop(const Operator2& s, double rate) {
    if (!(rate >= 0.0)) {
        throw InvalidArgument("lindblad_superop: negative rate " + std::to_string(rate) +
                              " breaks complete positivity");
    }
    const auto id = Operator2::identity(s.basis());
    const auto sds = s.adjoint() * s;
    const Mat4 m = sandwich_superop(s, s.adjoint()).matrix() -
                   0.5 * (sandwich_superop(sds, id).matrix() + sandwich_superop(id, sds).matrix());
    return SuperOp(rate * m, s.basis());
}

SuperOp superop_exp(const SuperOp& l, double t) {
    const Mat4 a = t * l.matrix();
    Eigen::ComplexEigenSolver<Mat4> es(a);
    if (es.info() == Eigen::Success) {
        const Mat4& v = es.eigenvectors();
        Eigen::JacobiSVD<Mat4> svd(v);
        const auto& sv = svd.singularValues();
        const double cond = sv(0) / sv(3);
        if (std::isfinite(cond) && cond <= kExpCondLimit) {
            const Vec4 ex = es.eigenvalues().array().exp();
            return SuperOp(v * ex.asDiagonal() * v.inverse(), l.basis());
        }
    }
    return SuperOp(a.exp(), l.basis());
}

} // namespace ftls
