// acceptance.cpp — One PASS/FAIL line per acceptance criterion

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ftls/commands.hpp"
#include "ftls/config.hpp"
#include "ftls/csv.hpp"
#include "ftls/verify.hpp"
#include "../test_util.hpp"

using namespace ftls;

namespace {

struct Outcome {
    bool pass{false};
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs the named suites with the default seed and folds them into one outcome.
Outcome suites(const std::vector<std::string>& names, double time_limit = 0.0) {
    const auto t0 = Clock::now();
    Outcome o{true, ""};
    for (const auto& n : names) {
        const auto r = run_verify_suite(n, VerifyConfig{});
        o.pass = o.pass && r.passed;
        o.detail += fmt::format("{}{} max_error={} tol={} ({} cases){}", o.detail.empty() ? "" : "; ", n,
                                format_double(r.max_error), format_double(r.tolerance), r.cases,
                                r.note.empty() ? "" : ", " + r.note);
    }
    const double secs = seconds_since(t0);
    if (time_limit > 0.0) {
        o.pass = o.pass && secs < time_limit;
        o.detail += fmt::format("; runtime {:.2f} s (limit {:.0f} s)", secs, time_limit);
    }
    return o;
}

Outcome ac1() {
    const auto dir = testutil::scratch_dir("acceptance_ac1");
    const auto cfg = default_spectrum_config();
    const auto p = cfg.params();
    const auto t0 = Clock::now();
    const int rc = cmd_spectrum(cfg, dir);
    const double secs = seconds_since(t0);
    if (rc != kExitOk) {
        return {false, fmt::format("cmd_spectrum exited {}", rc)};
    }
    const auto csv = testutil::read_csv(dir / "spectrum.csv");
    std::vector<double> w, y;
    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
        w.push_back(csv.num(r, "omega"));
        y.push_back(csv.num(r, "intensity"));
    }
    std::vector<std::size_t> peaks;
    for (std::size_t j = 1; j + 1 < y.size(); ++j) {
        if (y[j] > y[j - 1] && y[j] > y[j + 1]) {
            peaks.push_back(j);
        }
    }
    const double step = w[1] - w[0];
    std::string where;
    for (auto j : peaks) {
        where += fmt::format("{}{:.5f}", where.empty() ? "" : ", ", w[j]);
    }
    bool ok = peaks.size() == 3 && secs < 1.0;
    if (peaks.size() == 3) {
        const double target[3] = {p.Omega - p.OmegaR, p.Omega, p.Omega + p.OmegaR};
        for (int k = 0; k < 3; ++k) {
            ok = ok && std::abs(w[peaks[k]] - target[k]) <= step;
        }
        ok = ok && y[peaks[0]] != y[peaks[2]];
    }
    return {ok, fmt::format("A=1: {} local maxima at [{}], expected 3 at {:.5f}, {:.5f}, {:.5f} (step {:.2e}); "
                            "runtime {:.3f} s",
                            peaks.size(), where, p.Omega - p.OmegaR, p.Omega, p.Omega + p.OmegaR, step, secs)};
}

Outcome ac9() {
    const auto dir = testutil::scratch_dir("acceptance_ac9");
    const auto t0 = Clock::now();
    const int rc = run_command("verify", std::nullopt, dir, std::nullopt);
    const double secs = seconds_since(t0);
    return {rc == kExitOk && secs < 300.0, fmt::format("verify exit {} in {:.2f} s (limit 300 s)", rc, secs)};
}

const std::map<std::string, std::function<Outcome()>>& criteria() {
    static const std::map<std::string, std::function<Outcome()>> m{
        {"AC1", ac1},
        {"AC2", [] { return suites({"transitions.decomposition", "transitions.reconstruction"}, 30.0); }},
        {"AC3", [] { return suites({"floquet.propagator_oracle", "floquet.convergence_order"}); }},
        {"AC4", [] { return suites({"transitions.commutation"}); }},
        {"AC5", [] {
             return suites({"dissipator.trace", "dissipator.hermiticity", "dissipator.positivity",
                            "dissipator.closed_form"});
         }},
        {"AC6", [] { return suites({"spectroscopy.regression_oracle", "spectroscopy.elastic_weight"}, 60.0); }},
        {"AC7", [] { return suites({"thermo.closed_forms", "thermo.second_law", "thermo.spohn"}); }},
        {"AC8", [] { return suites({"thermo.regime_switch", "thermo.small_detuning"}); }},
        {"AC9", ac9},
    };
    return m;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> which;
    for (int i = 1; i < argc; ++i) {
        which.emplace_back(argv[i]);
    }
    if (which.empty()) {
        for (const auto& [k, _] : criteria()) {
            which.push_back(k);
        }
    }
    bool all = true;
    for (const auto& name : which) {
        const auto it = criteria().find(name);
        if (it == criteria().end()) {
            std::cerr << "unknown criterion " << name << "\n";
            return 2;
        }
        Outcome o;
        try {
            o = it->second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << name << (o.pass ? " PASS: " : " FAIL: ") << o.detail << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
