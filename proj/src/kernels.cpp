// kernels.cpp — Data-parallel inner loops (OpenMP) with their serial references

#include "ftls/kernels.hpp"

#include <cmath>
#include <numbers>

#include "ftls/errors.hpp"

namespace ftls::kernels {

namespace {

// Phase recurrence is re-anchored with an exact exp() this often.
constexpr std::size_t kReanchor = 256;

double lorentzian_point(std::span<const LorentzianLine> lines, double w) {
    double s = 0.0;
    for (const auto& l : lines) {
        s += l.weight * lorentzian(w - l.center, l.width);
    }
    return s;
}

double transform_point(std::span<const cplx> f, double dt, double w) {
    const std::size_t n = f.size();
    if (n < 2) {
        return 0.0;
    }
    const cplx step = std::exp(cplx(0.0, -w * dt));
    cplx phase{1.0, 0.0};
    cplx acc = 0.5 * f[0];
    for (std::size_t k = 1; k < n; ++k) {
        phase = (k % kReanchor == 0) ? std::exp(cplx(0.0, -w * dt * static_cast<double>(k))) : phase * step;
        const double wt = (k + 1 == n) ? 0.5 : 1.0;
        acc += wt * phase * f[k];
    }
    return dt * acc.real();
}

void check_sizes(std::size_t in, std::size_t out) {
    if (in != out) {
        throw InvalidArgument("kernel output span size does not match the frequency grid");
    }
}

} // namespace

double lorentzian(double x, double width) {
    return width / (std::numbers::pi * (width * width + x * x));
}

void lorentzian_sum_serial(std::span<const LorentzianLine> lines, std::span<const double> omega,
                           std::span<double> out) {
    check_sizes(omega.size(), out.size());
    for (std::size_t j = 0; j < omega.size(); ++j) {
        out[j] = lorentzian_point(lines, omega[j]);
    }
}

void lorentzian_sum_omp(std::span<const LorentzianLine> lines, std::span<const double> omega, std::span<double> out) {
    check_sizes(omega.size(), out.size());
    const auto n = static_cast<std::ptrdiff_t>(omega.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        out[j] = lorentzian_point(lines, omega[j]);
    }
}

void damped_transform_serial(std::span<const cplx> samples, double dt, std::span<const double> omega,
                             std::span<double> out) {
    check_sizes(omega.size(), out.size());
    for (std::size_t j = 0; j < omega.size(); ++j) {
        out[j] = transform_point(samples, dt, omega[j]);
    }
}

void damped_transform_omp(std::span<const cplx> samples, double dt, std::span<const double> omega,
                          std::span<double> out) {
    check_sizes(omega.size(), out.size());
    const auto n = static_cast<std::ptrdiff_t>(omega.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        out[j] = transform_point(samples, dt, omega[j]);
    }
}

} // namespace ftls::kernels
