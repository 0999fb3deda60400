// kernels.hpp — Data-parallel inner loops (OpenMP) with their serial references

#pragma once

#include <span>

#include "ftls/algebra.hpp"

namespace ftls::kernels {

enum class Exec { Serial, Parallel };

struct LorentzianLine {
    double center{0.0};
    double width{0.0};
    double weight{0.0};
};

// Normalized Lorentzian (1/π) w / (w² + x²).
double lorentzian(double x, double width);

// out[j] = Σ_lines weight · lorentzian(omega[j] - center, width)
void lorentzian_sum_serial(std::span<const LorentzianLine> lines, std::span<const double> omega,
                           std::span<double> out);
void lorentzian_sum_omp(std::span<const LorentzianLine> lines, std::span<const double> omega, std::span<double> out);

// Trapezoid rule for out[j] = Re ∫₀^{(N-1)dt} e^{-iω_j t} f(t) dt with
// samples[n] = f(n dt).
void damped_transform_serial(std::span<const cplx> samples, double dt, std::span<const double> omega,
                             std::span<double> out);
void damped_transform_omp(std::span<const cplx> samples, double dt, std::span<const double> omega,
                          std::span<double> out);

inline void lorentzian_sum(Exec e, std::span<const LorentzianLine> lines, std::span<const double> omega,
                           std::span<double> out) {
    e == Exec::Parallel ? lorentzian_sum_omp(lines, omega, out) : lorentzian_sum_serial(lines, omega, out);
}

inline void damped_transform(Exec e, std::span<const cplx> samples, double dt, std::span<const double> omega,
                             std::span<double> out) {
    e == Exec::Parallel ? damped_transform_omp(samples, dt, omega, out)
                        : damped_transform_serial(samples, dt, omega, out);
}

} // namespace ftls::kernels
