// verify.hpp — Invariant suites of every module, seeded and deterministic

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftls/config.hpp"

namespace ftls {

// mt19937_64 with a hand-rolled uniform so draws are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    bool coin() { return (eng_() >> 63) != 0; }

private:
    std::mt19937_64 eng_;
};

struct SuiteResult {
    std::string suite;
    std::size_t cases{0};
    double max_error{0.0};
    double tolerance{0.0};
    bool passed{false};
    nlohmann::json worst_case; // parameters of the case that produced max_error
    std::string note;
};

struct VerifyReport {
    std::uint64_t seed{0};
    std::vector<SuiteResult> suites;

    bool all_passed() const;
};

std::vector<std::string> verify_suite_names();

// Throws InvalidArgument for an unknown suite name or an override naming one.
SuiteResult run_verify_suite(const std::string& name, const VerifyConfig& cfg);
VerifyReport run_verify(const VerifyConfig& cfg);

// suite, cases, max_error, tolerance, status
std::string verify_report_csv(const VerifyReport& report);
nlohmann::json verify_failures_json(const VerifyReport& report);

} // namespace ftls
