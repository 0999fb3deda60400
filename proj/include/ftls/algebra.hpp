// algebra.hpp — 2x2 operators and 4x4 superoperators with basis tagging

#pragma once

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace ftls {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

inline constexpr double kAlgebraicTol = 1e-12;

// Which orthonormal basis the matrix entries refer to. Lab is the bare
// {|e>, |g>} basis of σ³; Dressed is the eigenbasis {φ₁, φ₂} of the averaged
// Hamiltonian.
enum class Basis { Lab, Dressed };

std::string_view to_string(Basis b);

class Operator2 {
public:
    Operator2() = default;
    explicit Operator2(const Mat2& m, Basis basis = Basis::Lab) : m_(m), basis_(basis) {}

    static Operator2 identity(Basis basis = Basis::Lab) { return Operator2(Mat2::Identity(), basis); }
    static Operator2 zero(Basis basis = Basis::Lab) { return Operator2(Mat2::Zero(), basis); }

    const Mat2& matrix() const { return m_; }
    Basis basis() const { return basis_; }
    cplx operator()(int r, int c) const { return m_(r, c); }

    Operator2 adjoint() const { return Operator2(m_.adjoint(), basis_); }
    cplx trace() const { return m_.trace(); }
    double norm() const { return m_.norm(); }
    bool is_hermitian(double tol = kAlgebraicTol) const;

    Operator2& operator+=(const Operator2& o);
    Operator2& operator-=(const Operator2& o);
    Operator2& operator*=(cplx s) { m_ *= s; return *this; }

    friend Operator2 operator+(Operator2 a, const Operator2& b) { return a += b; }
    friend Operator2 operator-(Operator2 a, const Operator2& b) { return a -= b; }
    friend Operator2 operator*(const Operator2& a, const Operator2& b);
    friend Operator2 operator*(cplx s, Operator2 a) { return a *= s; }
    friend Operator2 operator*(Operator2 a, cplx s) { return a *= s; }

private:
    Mat2 m_ = Mat2::Zero();
    Basis basis_ = Basis::Lab;
};

// Throws BasisMismatch unless both tags agree.
void require_same_basis(Basis a, Basis b, std::string_view what);

Operator2 commutator(const Operator2& a, const Operator2& b);
double distance(const Operator2& a, const Operator2& b); // Frobenius norm of a - b

// Lab-basis Pauli matrices; σ± = ½(σ¹ ± iσ²), so σ⁺ = |e><g| with |e> = (1,0).
Operator2 sigma1();
Operator2 sigma2();
Operator2 sigma3();
Operator2 sigma_plus();
Operator2 sigma_minus();

struct PauliCoefficients {
    cplx c0, c1, c2, c3;
};

// M = c0 I + c1 σ¹ + c2 σ² + c3 σ³ with ck = ½ Tr(σk M).
PauliCoefficients pauli_decompose(const Operator2& m);
Operator2 pauli_reconstruct(const PauliCoefficients& c, Basis basis = Basis::Lab);

// exp(-iHt) for Hermitian H, from the analytic formula
// e^{-i c0 t} (cos(|n|t) I - i sin(|n|t) n̂·σ).
Operator2 expm_hermitian(const Operator2& h, double t);

struct HermitianEigen {
    std::array<double, 2> values; // ascending
    Mat2 vectors;                 // columns
};
HermitianEigen hermitian_eigen(const Operator2& h);

// ln of a positive semidefinite Hermitian matrix; eigenvalues below `floor`
// are clipped to `floor` first.
Operator2 log_hermitian(const Operator2& h, double floor = 1e-14);
double von_neumann_entropy(const Operator2& rho, double floor = 1e-14);
double min_eigenvalue(const Operator2& h);

// Column stacking: vec(ρ) = (ρ₀₀, ρ₁₀, ρ₀₁, ρ₁₁), so vec(AXB) = (Bᵀ ⊗ A) vec(X).
Vec4 vectorize(const Operator2& rho);
Operator2 devectorize(const Vec4& v, Basis basis = Basis::Lab);

class SuperOp {
public:
    SuperOp() = default;
    explicit SuperOp(const Mat4& m, Basis basis = Basis::Lab) : m_(m), basis_(basis) {}

    static SuperOp zero(Basis basis = Basis::Lab) { return SuperOp(Mat4::Zero(), basis); }
    static SuperOp identity(Basis basis = Basis::Lab) { return SuperOp(Mat4::Identity(), basis); }

    const Mat4& matrix() const { return m_; }
    Basis basis() const { return basis_; }

    Operator2 apply(const Operator2& rho) const;

    SuperOp& operator+=(const SuperOp& o);
    friend SuperOp operator+(SuperOp a, const SuperOp& b) { return a += b; }
    friend SuperOp operator*(const SuperOp& a, const SuperOp& b); // composition a∘b
    friend SuperOp operator*(double s, SuperOp a) { a.m_ *= s; return a; }

private:
    Mat4 m_ = Mat4::Zero();
    Basis basis_ = Basis::Lab;
};

// ρ ↦ AρB
SuperOp sandwich_superop(const Operator2& a, const Operator2& b);
// ρ ↦ UρU†
SuperOp conjugation_superop(const Operator2& u);
// ρ ↦ -i[H, ρ]
SuperOp hamiltonian_superop(const Operator2& h);
// ρ ↦ rate (SρS† - ½{S†S, ρ}); rate must be >= 0.
SuperOp lindblad_superop(const Operator2& s, double rate);

// e^{tL}. Diagonalizes L; when the eigenvector matrix has condition number
// above 1e12 the result falls back to Padé scaling-and-squaring.
SuperOp superop_exp(const SuperOp& l, double t);

} // namespace ftls
