// commands.cpp — CLI commands: spectrum, heatpump, evolve, verify

#include "ftls/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "ftls/csv.hpp"
#include "ftls/errors.hpp"
#include "ftls/spectroscopy.hpp"
#include "ftls/thermo.hpp"
#include "ftls/transitions.hpp"
#include "ftls/verify.hpp"

namespace ftls {

namespace fs = std::filesystem;

namespace {

void prepare(const fs::path& out) {
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) {
        throw InvalidArgument(fmt::format("cannot create output directory '{}': {}", out.string(), ec.message()));
    }
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidArgument(fmt::format("cannot write '{}'", path.string()));
    }
    f << text;
}

} // namespace

int cmd_spectrum(const RunConfig& cfg, const fs::path& out) {
    const auto p = cfg.params();
    if (cfg.baths.size() != 1 || cfg.baths[0].channel != Channel::Sigma1 || cfg.baths[0].temperature != 0.0 ||
        !std::holds_alternative<CubicDensity>(cfg.baths[0].density)) {
        throw InvalidArgument("spectrum needs exactly one vacuum bath: channel sigma1, temperature 0, cubic density");
    }
    check_frequency_collisions(sigma1_transition_ops(p), p.Omega);
    const double a = std::get<CubicDensity>(cfg.baths[0].density).A;
    const auto sc = cfg.spectrum.value_or(SpectrumConfig{});
    auto s = mollow_spectrum(p, a, sc.normalize);

    prepare(out);
    CsvTable lines({"kind", "center", "width", "weight"});
    lines.add_row({std::string("elastic"), s.elastic_center, 0.0, s.elastic_weight});
    for (const auto& l : s.lines) {
        lines.add_row({std::string(to_string(l.kind)), l.center, l.width, l.weight});
    }
    lines.write(out / "spectrum_lines.csv");

    if (sc.points > 0) {
        sample_spectrum(s, uniform_grid(sc.omega_min, sc.omega_max, sc.points));
        CsvTable grid({"omega", "intensity"});
        for (std::size_t j = 0; j < s.omega.size(); ++j) {
            grid.add_row({s.omega[j], s.intensity[j]});
        }
        grid.write(out / "spectrum.csv");
    }
    return kExitOk;
}

int cmd_heatpump(const RunConfig& cfg, const fs::path& out) {
    const auto p = cfg.params();
    const auto hb = find_heatpump_baths(cfg.baths);
    const auto& em = cfg.baths[hb.em_index];
    const auto& deph = cfg.baths[hb.dephasing_index];
    const auto hc = cfg.heatpump.value_or(HeatPumpConfig{});

    const auto gen = total_generator(p, cfg.baths);
    const auto rep = thermo_report(p, gen);
    prepare(out);
    CsvTable thermo({"J_d", "J_e", "P", "entropy_rate", "regime"});
    thermo.add_row({rep.currents[hb.dephasing_index].current, rep.currents[hb.em_index].current, rep.power,
                    rep.entropy_rate, std::string(to_string(rep.regime))});
    thermo.write(out / "thermo.csv");

    if (hc.sweep) {
        const auto& sw = *hc.sweep;
        std::vector<double> deltas(sw.points);
        for (std::size_t k = 0; k < sw.points; ++k) {
            deltas[k] = sw.points == 1 ? sw.delta_min
                                       : sw.delta_min + (sw.delta_max - sw.delta_min) * static_cast<double>(k) /
                                                            static_cast<double>(sw.points - 1);
        }
        const auto pts = heatpump_sweep(p.Omega, p.g, em, deph, deltas, hc.margin);
        CsvTable sweep({"Delta", "J_d", "J_e", "P", "entropy_rate", "regime", "J_d_small_detuning"});
        for (const auto& pt : pts) {
            sweep.add_row({pt.Delta, pt.j_dephasing, pt.j_em, pt.power, pt.entropy_rate,
                           std::string(to_string(pt.regime)), pt.j_dephasing_approx.value_or(std::nan(""))});
        }
        sweep.write(out / "sweep.csv");
    }
    return kExitOk;
}

int cmd_evolve(const RunConfig& cfg, const fs::path& out) {
    const auto p = cfg.params();
    if (cfg.baths.empty()) {
        throw InvalidArgument("evolve needs at least one bath");
    }
    const auto ec = cfg.evolve.value_or(EvolveConfig{});
    const auto basis = dressed_basis(p);
    Mat2 m;
    m << ec.rho0.rho11, cplx(ec.rho0.rho12_re, ec.rho0.rho12_im), cplx(ec.rho0.rho12_re, -ec.rho0.rho12_im),
        1.0 - ec.rho0.rho11;
    const Operator2 given(m, ec.rho0.basis);
    const DensityMatrix rho0(ec.rho0.basis == Basis::Lab ? basis.to_dressed(given) : given);

    const auto gen = total_generator(p, cfg.baths);
    std::vector<double> times(ec.samples);
    for (std::size_t k = 0; k < ec.samples; ++k) {
        times[k] = ec.samples == 1 ? 0.0 : ec.t_max * static_cast<double>(k) / static_cast<double>(ec.samples - 1);
    }
    const auto trace = entropy_production(p, gen, rho0, times);
    if (trace.vacuum_excluded) {
        std::cerr << "note: " << trace.note << "\n";
    }

    prepare(out);
    CsvTable t({"t", "rho11", "rho22", "rho12_re", "rho12_im", "trace", "min_eigenvalue", "entropy",
                "entropy_production"});
    for (std::size_t k = 0; k < times.size(); ++k) {
        const auto rho = evolve_schrodinger(p, gen, rho0, times[k]).matrix();
        t.add_row({times[k], rho(0, 0).real(), rho(1, 1).real(), rho(0, 1).real(), rho(0, 1).imag(),
                   rho.trace().real(), min_eigenvalue(rho), trace.samples[k].entropy, trace.samples[k].production});
    }
    t.write(out / "evolve.csv");
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const fs::path& out) {
    const auto vc = cfg.verify.value_or(VerifyConfig{});
    const auto rep = run_verify(vc);
    prepare(out);
    const auto csv = verify_report_csv(rep);
    write_text(out / "verify.csv", csv);
    write_text(out / "verify_failures.json", verify_failures_json(rep).dump(2) + "\n");
    for (const auto& s : rep.suites) {
        std::cout << fmt::format("{:<36} {:>5} {:>24} {:>10} {}\n", s.suite, s.cases,
                                 format_double(s.max_error), format_double(s.tolerance), s.passed ? "PASS" : "FAIL");
        if (!s.passed && !s.note.empty()) {
            std::cout << "    " << s.note << "\n";
        }
    }
    return rep.all_passed() ? kExitOk : kExitVerifyFailed;
}

RunConfig default_config_for(const std::string& command) {
    if (command == "spectrum") {
        return default_spectrum_config();
    }
    if (command == "heatpump") {
        return default_heatpump_config();
    }
    if (command == "evolve") {
        return default_evolve_config();
    }
    if (command == "verify") {
        return default_verify_config();
    }
    throw InvalidArgument(fmt::format("unknown command '{}'", command));
}

int run_command(const std::string& command, const std::optional<fs::path>& config, const fs::path& out,
                std::optional<std::uint64_t> seed) {
    try {
        auto cfg = config ? load_config(*config) : default_config_for(command);
        if (seed) {
            if (!cfg.verify) {
                cfg.verify = VerifyConfig{};
            }
            cfg.verify->seed = *seed;
        }
        if (command == "spectrum") {
            return cmd_spectrum(cfg, out);
        }
        if (command == "heatpump") {
            return cmd_heatpump(cfg, out);
        }
        if (command == "evolve") {
            return cmd_evolve(cfg, out);
        }
        if (command == "verify") {
            return cmd_verify(cfg, out);
        }
        throw InvalidArgument(fmt::format("unknown command '{}'", command));
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DegeneracyError& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const NumericalError& e) {
        std::cerr << "numerical: " << e.what() << "\n";
        return kExitDegenerate;
    }
}

} // namespace ftls
