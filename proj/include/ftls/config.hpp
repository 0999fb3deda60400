// config.hpp — Run configuration: JSON ingestion, validation and serialization

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftls/dissipator.hpp"
#include "ftls/floquet.hpp"

namespace ftls {

struct SystemConfig {
    double omega0{0.86};
    double Omega{0.85};
    double g{0.075};
};

struct SpectrumConfig {
    double omega_min{0.5};
    double omega_max{1.2};
    std::size_t points{2001}; // 0: lines file only
    bool normalize{false};
};

struct SweepConfig {
    double delta_min{-0.05};
    double delta_max{0.05};
    std::size_t points{21};
};

struct HeatPumpConfig {
    std::optional<SweepConfig> sweep;
    double margin{10.0};
};

// Initial state ρ₀ = [[rho11, rho12], [conj(rho12), 1 - rho11]] in the given basis.
struct Rho0Config {
    Basis basis{Basis::Lab};
    double rho11{1.0};
    double rho12_re{0.0};
    double rho12_im{0.0};
};

struct EvolveConfig {
    Rho0Config rho0;
    double t_max{50.0};
    std::size_t samples{101};
};

struct VerifyConfig {
    std::uint64_t seed{1};
    std::optional<std::size_t> cases;     // overrides every randomized suite's case count
    std::optional<double> tolerance;      // overrides every suite's tolerance
    std::map<std::string, double> tolerances; // per-suite overrides, take precedence
};

struct RunConfig {
    SystemConfig system;
    std::vector<BathSpec> baths;
    std::optional<SpectrumConfig> spectrum;
    std::optional<HeatPumpConfig> heatpump;
    std::optional<EvolveConfig> evolve;
    std::optional<VerifyConfig> verify;

    SystemParams params() const;
};

// Throws InvalidArgument on malformed input, unknown keys or violated physical
// constraints (including Ω_R > Ω).
RunConfig parse_config(const nlohmann::json& j);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

nlohmann::json serialize_config(const RunConfig& c);
nlohmann::json serialize_bath(const BathSpec& b);

bool operator==(const RunConfig& a, const RunConfig& b);

// Fluorescence in vacuum at Ω = 0.85, Δ = 0.01, g = 0.075, A = 1.
RunConfig default_spectrum_config();
// Two-bath heat pump at Ω = 20, g = 0.005 with a Δ-sweep over [-0.05, 0.05].
RunConfig default_heatpump_config();
RunConfig default_evolve_config();
RunConfig default_verify_config();

} // namespace ftls
