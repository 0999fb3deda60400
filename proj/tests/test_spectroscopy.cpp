#include <doctest.h>

#include <cmath>

#include "ftls/dissipator.hpp"
#include "ftls/errors.hpp"
#include "ftls/kernels.hpp"
#include "ftls/spectroscopy.hpp"

using namespace ftls;

namespace {

std::vector<double> local_maxima(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> peaks;
    for (std::size_t j = 1; j + 1 < y.size(); ++j) {
        if (y[j] > y[j - 1] && y[j] > y[j + 1]) {
            peaks.push_back(x[j]);
        }
    }
    return peaks;
}

} // namespace

TEST_SUITE("spectroscopy") {

TEST_CASE("line positions, widths and weights at the reference drive") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto s = mollow_spectrum(p, 1.0);
    const auto r = fluorescence_rates(p, 1.0);
    CHECK(s.elastic_center == doctest::Approx(0.85));
    CHECK(s.lines[0].center == doctest::Approx(0.85));
    CHECK(s.lines[1].center == doctest::Approx(0.85 - p.OmegaR));
    CHECK(s.lines[2].center == doctest::Approx(0.85 + p.OmegaR));
    CHECK(s.lines[0].width == doctest::Approx(r.gamma1));
    CHECK(s.lines[1].width == doctest::Approx(r.gamma2));
    CHECK(s.elastic_weight == doctest::Approx(0.3418).epsilon(1e-3));
    CHECK(s.lines[0].weight == doctest::Approx(0.6582).epsilon(1e-3));
    CHECK(s.lines[1].weight == doctest::Approx(0.6935).epsilon(1e-3));
    CHECK(s.lines[2].weight == doctest::Approx(0.2373).epsilon(1e-3));
    CHECK(s.lines[1].weight != doctest::Approx(s.lines[2].weight));
}

TEST_CASE("normalized spectrum sums to one") {
    const auto s = mollow_spectrum(make_params(0.86, 0.85, 0.075), 1.0, true);
    CHECK(s.total_weight() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("mollow_spectrum requires a drive") {
    CHECK_THROWS_AS(mollow_spectrum(make_params(0.86, 0.85, 0.0), 1.0), InvalidArgument);
}

TEST_CASE("resolved triplet shows three maxima near Ω and Ω ± Ω_R") {
    const auto p = make_params(0.86, 0.85, 0.075);
    auto s = mollow_spectrum(p, 0.05);
    sample_spectrum(s, uniform_grid(0.5, 1.2, 2001));
    const auto peaks = local_maxima(s.omega, s.intensity);
    REQUIRE(peaks.size() == 3);
    const double step = 0.7 / 2000.0;
    CHECK(std::abs(peaks[0] - (p.Omega - p.OmegaR)) < 2 * step);
    CHECK(std::abs(peaks[1] - p.Omega) < 2 * step);
    CHECK(std::abs(peaks[2] - (p.Omega + p.OmegaR)) < 2 * step);
}

TEST_CASE("uniform grid endpoints") {
    const auto g = uniform_grid(0.5, 1.2, 2001);
    CHECK(g.size() == 2001);
    CHECK(g.front() == 0.5);
    CHECK(g.back() == doctest::Approx(1.2).epsilon(1e-15));
}

TEST_CASE("coherence decay rate equals γ₂") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto gen = total_generator(p, {{"v", Channel::Sigma1, 0.0, CubicDensity{1.0}}});
    CHECK(coherence_decay_rate(gen) == doctest::Approx(fluorescence_rates(p, 1.0).gamma2).epsilon(1e-12));
}

TEST_CASE("serial and OpenMP kernels agree") {
    const std::vector<kernels::LorentzianLine> lines{{0.7, 0.1, 1.0}, {0.85, 0.05, 0.5}, {1.0, 0.2, 0.3}};
    const auto grid = uniform_grid(0.5, 1.2, 777);
    std::vector<double> a(grid.size()), b(grid.size());
    kernels::lorentzian_sum_serial(lines, grid, a);
    kernels::lorentzian_sum_omp(lines, grid, b);
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j] == doctest::Approx(b[j]).epsilon(1e-14));
    }
}

TEST_CASE("damped transform of an exponential approaches the Lorentzian") {
    const double rate = 0.5, freq = 1.0, dt = 0.001;
    std::vector<cplx> f(60001);
    for (std::size_t k = 0; k < f.size(); ++k) {
        f[k] = std::exp(cplx(-rate, -freq) * (dt * static_cast<double>(k)));
    }
    const std::vector<double> omega{-1.0, -0.5, 0.0};
    std::vector<double> out(omega.size());
    kernels::damped_transform_serial(f, dt, omega, out);
    for (std::size_t j = 0; j < omega.size(); ++j) {
        const double x = omega[j] + freq;
        CHECK(out[j] == doctest::Approx(rate / (rate * rate + x * x)).epsilon(1e-6));
    }
}

TEST_CASE("regression oracle reproduces the closed-form shape") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto gen = total_generator(p, {{"v", Channel::Sigma1, 0.0, CubicDensity{1.0}}});
    const auto grid = uniform_grid(p.Omega - 4 * p.OmegaR, p.Omega + 4 * p.OmegaR, 400);
    auto closed = mollow_spectrum(p, 1.0);
    sample_spectrum(closed, grid);
    const auto oracle = regression_spectrum_oracle(p, gen, grid, 120.0, 0.01);
    const auto cmp = compare_spectra(closed, oracle);
    CHECK(cmp.relative_l2 < 1e-3);
    CHECK(cmp.elastic_rel_error < 1e-3);
    CHECK(oracle.horizon_residual < 1e-8);
}

TEST_CASE("regression oracle reports a horizon that is too short") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto gen = total_generator(p, {{"v", Channel::Sigma1, 0.0, CubicDensity{1.0}}});
    CHECK_THROWS_AS(regression_spectrum_oracle(p, gen, {0.85}, 5.0, 0.01), NumericalError);
}

} // TEST_SUITE
