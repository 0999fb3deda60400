// config.cpp — Run configuration: JSON ingestion, validation and serialization

#include "ftls/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "ftls/errors.hpp"

namespace ftls {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) {
        throw InvalidArgument(fmt::format("config: '{}' must be an object", where));
    }
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items()) {
        if (!ok.contains(key)) {
            throw InvalidArgument(fmt::format("config: unknown key '{}' in '{}'", key, where));
        }
    }
}

double get_number(const json& j, const char* key, const std::string& where, std::optional<double> fallback = {}) {
    if (!j.contains(key)) {
        if (fallback) {
            return *fallback;
        }
        throw InvalidArgument(fmt::format("config: missing '{}.{}'", where, key));
    }
    const auto& v = j.at(key);
    if (!v.is_number()) {
        throw InvalidArgument(fmt::format("config: '{}.{}' must be a number", where, key));
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw InvalidArgument(fmt::format("config: '{}.{}' must be finite", where, key));
    }
    return x;
}

std::size_t get_count(const json& j, const char* key, const std::string& where, std::size_t fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InvalidArgument(fmt::format("config: '{}.{}' must be a non-negative integer", where, key));
    }
    return v.get<std::size_t>();
}

bool get_bool(const json& j, const char* key, const std::string& where, bool fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_boolean()) {
        throw InvalidArgument(fmt::format("config: '{}.{}' must be true or false", where, key));
    }
    return j.at(key).get<bool>();
}

std::string get_string(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw InvalidArgument(fmt::format("config: '{}.{}' must be a string", where, key));
    }
    return j.at(key).get<std::string>();
}

std::vector<double> get_array(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw InvalidArgument(fmt::format("config: '{}.{}' must be an array of numbers", where, key));
    }
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number() || !std::isfinite(v.get<double>())) {
            throw InvalidArgument(fmt::format("config: '{}.{}' must contain finite numbers", where, key));
        }
        out.push_back(v.get<double>());
    }
    return out;
}

SpectralDensity parse_density(const json& j, const std::string& where) {
    require_object(j, where);
    const auto kind = get_string(j, "kind", where);
    if (kind == "cubic") {
        reject_unknown(j, where, {"kind", "A"});
        const double a = get_number(j, "A", where);
        if (!(a > 0.0)) {
            throw InvalidArgument(fmt::format("config: '{}.A' must be positive", where));
        }
        return CubicDensity{a};
    }
    if (kind == "flat") {
        reject_unknown(j, where, {"kind", "value"});
        const double v = get_number(j, "value", where);
        if (!(v >= 0.0)) {
            throw InvalidArgument(fmt::format("config: '{}.value' must be non-negative", where));
        }
        return FlatDensity{v};
    }
    if (kind == "tabulated") {
        reject_unknown(j, where, {"kind", "omega", "values"});
        TabulatedDensity t{get_array(j, "omega", where), get_array(j, "values", where)};
        if (t.omegas.size() < 2 || t.omegas.size() != t.values.size()) {
            throw InvalidArgument(
                fmt::format("config: '{}' needs matching 'omega' and 'values' arrays of length >= 2", where));
        }
        for (std::size_t i = 0; i < t.omegas.size(); ++i) {
            if (t.values[i] < 0.0) {
                throw InvalidArgument(fmt::format("config: '{}.values' must be non-negative", where));
            }
            if (t.omegas[i] < 0.0 || (i > 0 && !(t.omegas[i] > t.omegas[i - 1]))) {
                throw InvalidArgument(
                    fmt::format("config: '{}.omega' must be non-negative and strictly increasing", where));
            }
        }
        return t;
    }
    throw InvalidArgument(fmt::format("config: '{}.kind' must be cubic, flat or tabulated, got '{}'", where, kind));
}

json serialize_density(const SpectralDensity& d) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CubicDensity>) {
                return {{"kind", "cubic"}, {"A", x.A}};
            } else if constexpr (std::is_same_v<T, FlatDensity>) {
                return {{"kind", "flat"}, {"value", x.value}};
            } else {
                return {{"kind", "tabulated"}, {"omega", x.omegas}, {"values", x.values}};
            }
        },
        d);
}

BathSpec parse_bath(const json& j, const std::string& where) {
    require_object(j, where);
    reject_unknown(j, where, {"label", "channel", "temperature", "density"});
    BathSpec b;
    b.label = get_string(j, "label", where);
    if (b.label.empty()) {
        throw InvalidArgument(fmt::format("config: '{}.label' must not be empty", where));
    }
    const auto ch = get_string(j, "channel", where);
    if (ch == "sigma1") {
        b.channel = Channel::Sigma1;
    } else if (ch == "sigma3") {
        b.channel = Channel::Sigma3;
    } else {
        throw InvalidArgument(fmt::format("config: '{}.channel' must be sigma1 or sigma3, got '{}'", where, ch));
    }
    b.temperature = get_number(j, "temperature", where);
    if (b.temperature < 0.0) {
        throw InvalidArgument(fmt::format("config: '{}.temperature' must be >= 0", where));
    }
    if (!j.contains("density")) {
        throw InvalidArgument(fmt::format("config: missing '{}.density'", where));
    }
    b.density = parse_density(j.at("density"), where + ".density");
    return b;
}

Basis parse_basis(const std::string& s, const std::string& where) {
    if (s == "lab") {
        return Basis::Lab;
    }
    if (s == "dressed") {
        return Basis::Dressed;
    }
    throw InvalidArgument(fmt::format("config: '{}' must be lab or dressed, got '{}'", where, s));
}

} // namespace

SystemParams RunConfig::params() const {
    return make_params(system.omega0, system.Omega, system.g);
}

RunConfig parse_config(const json& j) {
    require_object(j, "<root>");
    reject_unknown(j, "<root>", {"system", "baths", "spectrum", "heatpump", "evolve", "verify"});
    RunConfig c;

    if (!j.contains("system")) {
        throw InvalidArgument("config: missing 'system' section");
    }
    const auto& s = j.at("system");
    require_object(s, "system");
    reject_unknown(s, "system", {"omega0", "Omega", "g"});
    c.system = {get_number(s, "omega0", "system"), get_number(s, "Omega", "system"), get_number(s, "g", "system")};
    c.params(); // re-validates Ω > 0, g >= 0 and Ω_R <= Ω

    if (j.contains("baths")) {
        if (!j.at("baths").is_array()) {
            throw InvalidArgument("config: 'baths' must be an array");
        }
        std::set<std::string> labels;
        for (std::size_t i = 0; i < j.at("baths").size(); ++i) {
            auto b = parse_bath(j.at("baths")[i], fmt::format("baths[{}]", i));
            if (!labels.insert(b.label).second) {
                throw InvalidArgument(fmt::format("config: duplicate bath label '{}'", b.label));
            }
            c.baths.push_back(std::move(b));
        }
    }

    if (j.contains("spectrum")) {
        const auto& x = j.at("spectrum");
        require_object(x, "spectrum");
        reject_unknown(x, "spectrum", {"omega_min", "omega_max", "points", "normalize"});
        SpectrumConfig sc;
        sc.omega_min = get_number(x, "omega_min", "spectrum", sc.omega_min);
        sc.omega_max = get_number(x, "omega_max", "spectrum", sc.omega_max);
        sc.points = get_count(x, "points", "spectrum", sc.points);
        sc.normalize = get_bool(x, "normalize", "spectrum", sc.normalize);
        if (sc.points > 0 && !(sc.omega_max > sc.omega_min)) {
            throw InvalidArgument("config: 'spectrum' needs omega_min < omega_max");
        }
        c.spectrum = sc;
    }

    if (j.contains("heatpump")) {
        const auto& x = j.at("heatpump");
        require_object(x, "heatpump");
        reject_unknown(x, "heatpump", {"sweep", "margin"});
        HeatPumpConfig hc;
        hc.margin = get_number(x, "margin", "heatpump", hc.margin);
        if (!(hc.margin > 0.0)) {
            throw InvalidArgument("config: 'heatpump.margin' must be positive");
        }
        if (x.contains("sweep")) {
            const auto& w = x.at("sweep");
            require_object(w, "heatpump.sweep");
            reject_unknown(w, "heatpump.sweep", {"delta_min", "delta_max", "points"});
            SweepConfig sw;
            sw.delta_min = get_number(w, "delta_min", "heatpump.sweep", sw.delta_min);
            sw.delta_max = get_number(w, "delta_max", "heatpump.sweep", sw.delta_max);
            sw.points = get_count(w, "points", "heatpump.sweep", sw.points);
            if (sw.points == 0 || (sw.points > 1 && !(sw.delta_max > sw.delta_min))) {
                throw InvalidArgument("config: 'heatpump.sweep' needs points >= 1 and delta_min < delta_max");
            }
            hc.sweep = sw;
        }
        c.heatpump = hc;
    }

    if (j.contains("evolve")) {
        const auto& x = j.at("evolve");
        require_object(x, "evolve");
        reject_unknown(x, "evolve", {"rho0", "t_max", "samples"});
        EvolveConfig ec;
        ec.t_max = get_number(x, "t_max", "evolve", ec.t_max);
        ec.samples = get_count(x, "samples", "evolve", ec.samples);
        if (ec.t_max < 0.0 || ec.samples < 1) {
            throw InvalidArgument("config: 'evolve' needs t_max >= 0 and samples >= 1");
        }
        if (x.contains("rho0")) {
            const auto& r = x.at("rho0");
            require_object(r, "evolve.rho0");
            reject_unknown(r, "evolve.rho0", {"basis", "rho11", "rho12_re", "rho12_im"});
            if (r.contains("basis")) {
                ec.rho0.basis = parse_basis(get_string(r, "basis", "evolve.rho0"), "evolve.rho0.basis");
            }
            ec.rho0.rho11 = get_number(r, "rho11", "evolve.rho0", ec.rho0.rho11);
            ec.rho0.rho12_re = get_number(r, "rho12_re", "evolve.rho0", ec.rho0.rho12_re);
            ec.rho0.rho12_im = get_number(r, "rho12_im", "evolve.rho0", ec.rho0.rho12_im);
            const double p1 = ec.rho0.rho11;
            const double c2 = ec.rho0.rho12_re * ec.rho0.rho12_re + ec.rho0.rho12_im * ec.rho0.rho12_im;
            if (p1 < 0.0 || p1 > 1.0 || c2 > p1 * (1.0 - p1) + 1e-12) {
                throw InvalidArgument("config: 'evolve.rho0' is not a density matrix (need 0 <= rho11 <= 1 and "
                                      "|rho12|^2 <= rho11 (1 - rho11))");
            }
        }
        c.evolve = ec;
    }

    if (j.contains("verify")) {
        const auto& x = j.at("verify");
        require_object(x, "verify");
        reject_unknown(x, "verify", {"seed", "cases", "tolerance", "tolerances"});
        VerifyConfig vc;
        if (x.contains("seed")) {
            if (!x.at("seed").is_number_unsigned()) {
                throw InvalidArgument("config: 'verify.seed' must be a non-negative integer");
            }
            vc.seed = x.at("seed").get<std::uint64_t>();
        }
        if (x.contains("cases")) {
            vc.cases = get_count(x, "cases", "verify", 0);
            if (*vc.cases == 0) {
                throw InvalidArgument("config: 'verify.cases' must be positive");
            }
        }
        if (x.contains("tolerance")) {
            vc.tolerance = get_number(x, "tolerance", "verify");
            if (!(*vc.tolerance >= 0.0)) {
                throw InvalidArgument("config: 'verify.tolerance' must be non-negative");
            }
        }
        if (x.contains("tolerances")) {
            const auto& t = x.at("tolerances");
            require_object(t, "verify.tolerances");
            for (const auto& [suite, v] : t.items()) {
                if (!v.is_number() || !(v.get<double>() >= 0.0)) {
                    throw InvalidArgument(fmt::format("config: 'verify.tolerances.{}' must be a non-negative number",
                                                      suite));
                }
                vc.tolerances[suite] = v.get<double>();
            }
        }
        c.verify = vc;
    }
    return c;
}

RunConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(fmt::format("config: not valid JSON ({})", e.what()));
    }
    return parse_config(j);
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument(fmt::format("config: cannot open '{}'", path.string()));
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

json serialize_bath(const BathSpec& b) {
    return {{"label", b.label},
            {"channel", b.channel == Channel::Sigma1 ? "sigma1" : "sigma3"},
            {"temperature", b.temperature},
            {"density", serialize_density(b.density)}};
}

json serialize_config(const RunConfig& c) {
    json j;
    j["system"] = {{"omega0", c.system.omega0}, {"Omega", c.system.Omega}, {"g", c.system.g}};
    j["baths"] = json::array();
    for (const auto& b : c.baths) {
        j["baths"].push_back(serialize_bath(b));
    }
    if (c.spectrum) {
        const auto& s = *c.spectrum;
        j["spectrum"] = {
            {"omega_min", s.omega_min}, {"omega_max", s.omega_max}, {"points", s.points}, {"normalize", s.normalize}};
    }
    if (c.heatpump) {
        j["heatpump"] = {{"margin", c.heatpump->margin}};
        if (c.heatpump->sweep) {
            const auto& w = *c.heatpump->sweep;
            j["heatpump"]["sweep"] = {{"delta_min", w.delta_min}, {"delta_max", w.delta_max}, {"points", w.points}};
        }
    }
    if (c.evolve) {
        const auto& e = *c.evolve;
        j["evolve"] = {{"t_max", e.t_max},
                       {"samples", e.samples},
                       {"rho0",
                        {{"basis", e.rho0.basis == Basis::Lab ? "lab" : "dressed"},
                         {"rho11", e.rho0.rho11},
                         {"rho12_re", e.rho0.rho12_re},
                         {"rho12_im", e.rho0.rho12_im}}}};
    }
    if (c.verify) {
        const auto& v = *c.verify;
        j["verify"] = {{"seed", v.seed}};
        if (v.cases) {
            j["verify"]["cases"] = *v.cases;
        }
        if (v.tolerance) {
            j["verify"]["tolerance"] = *v.tolerance;
        }
        if (!v.tolerances.empty()) {
            j["verify"]["tolerances"] = v.tolerances;
        }
    }
    return j;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    auto eq_sys = [](const SystemConfig& x, const SystemConfig& y) {
        return x.omega0 == y.omega0 && x.Omega == y.Omega && x.g == y.g;
    };
    auto eq_spec = [](const SpectrumConfig& x, const SpectrumConfig& y) {
        return x.omega_min == y.omega_min && x.omega_max == y.omega_max && x.points == y.points &&
               x.normalize == y.normalize;
    };
    auto eq_sweep = [](const SweepConfig& x, const SweepConfig& y) {
        return x.delta_min == y.delta_min && x.delta_max == y.delta_max && x.points == y.points;
    };
    auto eq_hp = [&](const HeatPumpConfig& x, const HeatPumpConfig& y) {
        return x.margin == y.margin && x.sweep.has_value() == y.sweep.has_value() &&
               (!x.sweep || eq_sweep(*x.sweep, *y.sweep));
    };
    auto eq_ev = [](const EvolveConfig& x, const EvolveConfig& y) {
        return x.t_max == y.t_max && x.samples == y.samples && x.rho0.basis == y.rho0.basis &&
               x.rho0.rho11 == y.rho0.rho11 && x.rho0.rho12_re == y.rho0.rho12_re &&
               x.rho0.rho12_im == y.rho0.rho12_im;
    };
    auto eq_ver = [](const VerifyConfig& x, const VerifyConfig& y) {
        return x.seed == y.seed && x.cases == y.cases && x.tolerance == y.tolerance && x.tolerances == y.tolerances;
    };
    auto eq_opt = [](const auto& x, const auto& y, auto eq) { return x.has_value() == y.has_value() && (!x || eq(*x, *y)); };
    return eq_sys(a.system, b.system) && a.baths == b.baths && eq_opt(a.spectrum, b.spectrum, eq_spec) &&
           eq_opt(a.heatpump, b.heatpump, eq_hp) && eq_opt(a.evolve, b.evolve, eq_ev) &&
           eq_opt(a.verify, b.verify, eq_ver);
}

RunConfig default_spectrum_config() {
    RunConfig c;
    c.system = {0.86, 0.85, 0.075};
    c.baths = {{"vacuum", Channel::Sigma1, 0.0, CubicDensity{1.0}}};
    c.spectrum = SpectrumConfig{};
    return c;
}

RunConfig default_heatpump_config() {
    RunConfig c;
    c.system = {20.01, 20.0, 0.005};
    c.baths = {{"em", Channel::Sigma1, 1.0, CubicDensity{1e-3}}, {"dephasing", Channel::Sigma3, 1.0, FlatDensity{1.0}}};
    c.heatpump = HeatPumpConfig{SweepConfig{}, 10.0};
    return c;
}

RunConfig default_evolve_config() {
    RunConfig c = default_spectrum_config();
    c.spectrum.reset();
    c.evolve = EvolveConfig{};
    return c;
}

RunConfig default_verify_config() {
    RunConfig c = default_spectrum_config();
    c.spectrum.reset();
    c.verify = VerifyConfig{};
    return c;
}

} // namespace ftls
