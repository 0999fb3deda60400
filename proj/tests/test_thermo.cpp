#include <doctest.h>

#include <cmath>

#include "ftls/config.hpp"
#include "ftls/errors.hpp"
#include "ftls/thermo.hpp"
#include "test_util.hpp"

using namespace ftls;
using testutil::mat;

namespace {

struct Pump {
    SystemParams p;
    BathSpec em;
    BathSpec deph;
};

Pump generic(double te = 0.5, double td = 2.0) {
    return {make_params(10.1, 10.0, 0.5), {"em", Channel::Sigma1, te, FlatDensity{1.0}},
            {"dephasing", Channel::Sigma3, td, FlatDensity{0.5}}};
}

} // namespace

TEST_SUITE("thermo") {

TEST_CASE("regime classification") {
    CHECK(classify_regime(1.0, -1.0) == Regime::Cooling);
    CHECK(classify_regime(-1.0, -1.0) == Regime::Heating);
    CHECK(classify_regime(1.0, 1.0) == Regime::Other);
    CHECK(classify_regime(-1.0, 1.0) == Regime::Other);
    CHECK(to_string(Regime::Cooling) == "Cooling");
}

TEST_CASE("stationary currents match the population closed forms") {
    const auto hp = generic();
    const auto gen = total_generator(hp.p, {hp.em, hp.deph});
    const auto cf = heatpump_currents(heatpump_rates(hp.p, hp.em, hp.deph), 0.5, 2.0);
    CHECK(stationary_current(hp.p, gen, 0) == doctest::Approx(cf.j_em).epsilon(1e-12));
    CHECK(stationary_current(hp.p, gen, 1) == doctest::Approx(cf.j_dephasing).epsilon(1e-12));
    CHECK(cf.K > 0.0);
}

TEST_CASE("report: energy balance and non-negative entropy production") {
    const auto hp = generic();
    const auto rep = thermo_report(hp.p, total_generator(hp.p, {hp.em, hp.deph}));
    REQUIRE(rep.currents.size() == 2);
    CHECK(rep.power == doctest::Approx(-(rep.currents[0].current + rep.currents[1].current)));
    CHECK(stationary_power(rep) == doctest::Approx(rep.power));
    CHECK(rep.entropy_rate == doctest::Approx(-(rep.currents[0].current / 0.5 + rep.currents[1].current / 2.0)));
    CHECK(rep.entropy_rate >= -1e-12);
    CHECK_FALSE(rep.vacuum_excluded);
}

TEST_CASE("equal temperatures: work is dissipated, never extracted") {
    const auto hp = generic(1.0, 1.0);
    const auto rep = thermo_report(hp.p, total_generator(hp.p, {hp.em, hp.deph}));
    CHECK(rep.power >= 0.0);
    CHECK(rep.entropy_rate == doctest::Approx(rep.power / 1.0).epsilon(1e-10));
}

TEST_CASE("vacuum bath is left out of the entropy rate") {
    const auto p = make_params(0.86, 0.85, 0.075);
    const auto rep = thermo_report(p, total_generator(p, {{"v", Channel::Sigma1, 0.0, CubicDensity{1.0}}}));
    CHECK(rep.vacuum_excluded);
    CHECK(rep.entropy_rate == 0.0);
    CHECK(rep.regime == Regime::Other);
}

TEST_CASE("local Gibbs state is annihilated and carries no current") {
    const auto hp = generic();
    const auto gen = total_generator(hp.p, {hp.em, hp.deph});
    const std::vector<BathSpec> baths{hp.em, hp.deph};
    for (const auto& term : gen.terms) {
        if (term.op.bohr == 0) {
            continue;
        }
        const auto gibbs = local_gibbs_state(hp.p, term, baths[term.bath_index]);
        CHECK(term.superop.apply(gibbs).norm() < 1e-12);
        CHECK(std::abs(gibbs.trace() - 1.0) < 1e-14);
    }
}

TEST_CASE("log form and energy form of the local current coincide") {
    const auto hp = generic();
    const auto gen = total_generator(hp.p, {hp.em, hp.deph});
    const std::vector<BathSpec> baths{hp.em, hp.deph};
    const auto rho = mat(0.3, {0.1, 0.2}, {0.1, -0.2}, 0.7, Basis::Dressed);
    for (const auto& term : gen.terms) {
        if (term.op.bohr == 0) {
            CHECK(local_heat_current(hp.p, term, rho, 0.4) == 0.0);
            continue;
        }
        CHECK(local_heat_current(hp.p, term, rho, 0.4) ==
              doctest::Approx(local_heat_current_log_form(hp.p, term, baths[term.bath_index], rho, 0.4)).epsilon(1e-10));
    }
}

TEST_CASE("Spohn functional is non-positive") {
    const auto hp = generic();
    const auto gen = total_generator(hp.p, {hp.em, hp.deph});
    const auto ss = stationary_state(gen).matrix();
    for (double a : {0.05, 0.3, 0.6, 0.95}) {
        const auto rho = mat(a, {0.1, 0.05}, {0.1, -0.05}, 1.0 - a, Basis::Dressed);
        CHECK(spohn_functional(gen.total, rho, ss) <= 1e-12);
    }
}

TEST_CASE("entropy production is non-negative along a trajectory and settles on the limit cycle") {
    const auto hp = generic();
    const auto gen = total_generator(hp.p, {hp.em, hp.deph});
    const DensityMatrix rho0(mat(0.9, 0.1, 0.1, 0.1, Basis::Dressed));
    std::vector<double> times;
    for (int k = 0; k <= 30; ++k) {
        times.push_back(0.5 * k);
    }
    const auto tr = entropy_production(hp.p, gen, rho0, times);
    REQUIRE(tr.samples.size() == times.size());
    for (const auto& s : tr.samples) {
        CHECK(s.production >= -1e-10);
    }
    const auto rep = thermo_report(hp.p, gen);
    const std::vector<double> late{200.0};
    CHECK(entropy_production(hp.p, gen, rho0, late).samples[0].production ==
          doctest::Approx(rep.entropy_rate).epsilon(1e-6));
}

TEST_CASE("heat-pump bath discovery") {
    const auto hp = generic();
    const auto b = find_heatpump_baths({hp.deph, hp.em});
    CHECK(b.em_index == 1);
    CHECK(b.dephasing_index == 0);
    CHECK_THROWS_AS(find_heatpump_baths({hp.em}), InvalidArgument);
    CHECK_THROWS_AS(find_heatpump_baths({hp.em, hp.em}), InvalidArgument);
    auto cold = hp.deph;
    cold.temperature = 0.0;
    CHECK_THROWS_AS(find_heatpump_baths({hp.em, cold}), InvalidArgument);
}

TEST_CASE("default heat pump cools for Δ > 0 and heats for Δ < 0") {
    const auto cfg = default_heatpump_config();
    const auto rep = thermo_report(cfg.params(), total_generator(cfg.params(), cfg.baths));
    CHECK(rep.regime == Regime::Cooling);
    CHECK(rep.currents[1].current == doctest::Approx(0.00564).epsilon(1e-2));

    const std::vector<double> deltas{-0.04, -0.01, 0.01, 0.04};
    const auto pts = heatpump_sweep(20.0, 0.005, cfg.baths[0], cfg.baths[1], deltas);
    CHECK(pts[0].regime == Regime::Heating);
    CHECK(pts[1].regime == Regime::Heating);
    CHECK(pts[2].regime == Regime::Cooling);
    CHECK(pts[3].regime == Regime::Cooling);
    for (const auto& pt : pts) {
        CHECK(pt.j_em < 0.0);
        REQUIRE(pt.j_dephasing_approx.has_value());
        CHECK(*pt.j_dephasing_approx == doctest::Approx(pt.j_dephasing).epsilon(0.05));
    }
}

TEST_CASE("serial and parallel sweeps agree") {
    const auto cfg = default_heatpump_config();
    const std::vector<double> deltas{-0.03, 0.0, 0.02};
    const auto a = heatpump_sweep(20.0, 0.005, cfg.baths[0], cfg.baths[1], deltas, 10.0, kernels::Exec::Serial);
    const auto b = heatpump_sweep(20.0, 0.005, cfg.baths[0], cfg.baths[1], deltas, 10.0, kernels::Exec::Parallel);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].j_dephasing == b[k].j_dephasing);
        CHECK(a[k].j_em == b[k].j_em);
    }
}

TEST_CASE("small-detuning formula refuses parameters outside its regime") {
    const auto hp = generic();
    CHECK_FALSE(small_detuning_violations(hp.p, hp.em, hp.deph).empty());
    CHECK_THROWS_AS(small_detuning_currents(hp.p, hp.em, hp.deph), InvalidArgument);
}

TEST_CASE("degenerate heat-pump rates") {
    // Ω_R = Ω makes Ω₋ = 0.
    const auto p = make_params(1.0, 1.0, 0.5);
    const BathSpec em{"em", Channel::Sigma1, 1.0, FlatDensity{1.0}};
    const BathSpec deph{"d", Channel::Sigma3, 1.0, FlatDensity{1.0}};
    CHECK_THROWS_AS(heatpump_rates(p, em, deph), DegeneracyError);
}

} // TEST_SUITE
