#include <doctest.h>

#include <cmath>
#include <fstream>

#include "ftls/commands.hpp"
#include "ftls/config.hpp"
#include "ftls/csv.hpp"
#include "ftls/errors.hpp"
#include "ftls/verify.hpp"
#include "test_util.hpp"

using namespace ftls;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path write_config(const fs::path& dir, const json& j) {
    const auto path = dir / "config.json";
    std::ofstream(path) << j.dump(2);
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("config round-trips through JSON") {
    for (const auto& c : {default_spectrum_config(), default_heatpump_config(), default_evolve_config(),
                          default_verify_config()}) {
        CHECK(parse_config(serialize_config(c)) == c);
    }
    auto c = default_heatpump_config();
    c.baths[0].density = TabulatedDensity{{0.0, 10.0, 30.0}, {0.0, 1.0, 0.5}};
    CHECK(parse_config(serialize_config(c)) == c);
}

TEST_CASE("config parsing rejects bad input") {
    const json base = serialize_config(default_spectrum_config());
    auto j = base;
    j["system"]["bogus"] = 1;
    CHECK_THROWS_AS(parse_config(j), InvalidArgument);
    j = base;
    j["system"]["g"] = 2.0; // Ω_R > Ω
    CHECK_THROWS_AS(parse_config(j), InvalidArgument);
    j = base;
    j["baths"][0]["temperature"] = -1.0;
    CHECK_THROWS_AS(parse_config(j), InvalidArgument);
    j = base;
    j["baths"][0]["channel"] = "sigma2";
    CHECK_THROWS_AS(parse_config(j), InvalidArgument);
    CHECK_THROWS_AS(parse_config_text("{ not json"), InvalidArgument);
    CHECK_THROWS_AS(load_config("/nonexistent/ftls.json"), InvalidArgument);
}

TEST_CASE("csv formatting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(std::nan("")) == "nan");
    CsvTable t({"a", "b"});
    t.add_row({1.5, std::string("x")});
    CHECK(t.str() == "a,b\n1.5,x\n");
    CHECK_THROWS(t.add_row({1.0}));
}

TEST_CASE("spectrum command writes the line table and the grid") {
    const auto dir = testutil::scratch_dir("cli_spectrum");
    CHECK(run_command("spectrum", std::nullopt, dir, std::nullopt) == kExitOk);
    const auto lines = testutil::read_csv(dir / "spectrum_lines.csv");
    CHECK(lines.header == std::vector<std::string>{"kind", "center", "width", "weight"});
    REQUIRE(lines.rows.size() == 4);
    CHECK(lines.rows[0][0] == "elastic");
    const auto grid = testutil::read_csv(dir / "spectrum.csv");
    CHECK(grid.rows.size() == 2001);
}

TEST_CASE("heatpump command writes thermo and sweep tables") {
    const auto dir = testutil::scratch_dir("cli_heatpump");
    CHECK(run_command("heatpump", std::nullopt, dir, std::nullopt) == kExitOk);
    const auto th = testutil::read_csv(dir / "thermo.csv");
    REQUIRE(th.rows.size() == 1);
    CHECK(th.rows[0][th.col("regime")] == "Cooling");
    const auto sw = testutil::read_csv(dir / "sweep.csv");
    CHECK(sw.rows.size() == 21);
    CHECK(sw.num(0, "J_e") < 0.0);
}

TEST_CASE("evolve command keeps ρ a valid state") {
    const auto dir = testutil::scratch_dir("cli_evolve");
    CHECK(run_command("evolve", std::nullopt, dir, std::nullopt) == kExitOk);
    const auto ev = testutil::read_csv(dir / "evolve.csv");
    CHECK(ev.rows.size() == 101);
    for (std::size_t r = 0; r < ev.rows.size(); ++r) {
        CHECK(std::abs(ev.num(r, "trace") - 1.0) < 1e-12);
        CHECK(ev.num(r, "min_eigenvalue") > -1e-10);
    }
}

TEST_CASE("exit codes") {
    const auto dir = testutil::scratch_dir("cli_exit");
    auto j = serialize_config(default_spectrum_config());
    j["system"]["g"] = 1.0;
    CHECK(run_command("spectrum", write_config(dir, j), dir, std::nullopt) == kExitConfig);

    j = serialize_config(default_spectrum_config());
    j["system"]["omega0"] = j["system"]["Omega"];
    j["system"]["g"] = 0.0;
    CHECK(run_command("evolve", write_config(dir, j), dir, std::nullopt) == kExitDegenerate);

    CHECK(run_command("heatpump", write_config(dir, serialize_config(default_spectrum_config())), dir,
                      std::nullopt) == kExitConfig);
    CHECK(run_command("nonsense", std::nullopt, dir, std::nullopt) == kExitConfig);
}

TEST_CASE("verify is deterministic and reports failures with replay data") {
    VerifyConfig vc;
    vc.seed = 42;
    vc.cases = 5;
    const auto a = run_verify_suite("dissipator.kms", vc);
    const auto b = run_verify_suite("dissipator.kms", vc);
    CHECK(a.passed);
    CHECK(a.max_error == b.max_error);
    CHECK(a.worst_case == b.worst_case);

    vc.tolerances["algebra.lgks"] = 1e-300;
    VerifyReport rep{42, {run_verify_suite("algebra.lgks", vc)}};
    CHECK_FALSE(rep.all_passed());
    const auto fj = verify_failures_json(rep);
    REQUIRE(fj["failures"].size() == 1);
    CHECK(fj["failures"][0]["suite"] == "algebra.lgks");
    CHECK_FALSE(fj["failures"][0]["worst_case"].is_null());

    CHECK_THROWS_AS(run_verify_suite("no.such_suite", VerifyConfig{}), InvalidArgument);
}

TEST_CASE("verify command writes both artifacts") {
    const auto dir = testutil::scratch_dir("cli_verify");
    auto cfg = default_verify_config();
    cfg.verify->cases = 3;
    CHECK(cmd_verify(cfg, dir) == kExitOk);
    CHECK(fs::exists(dir / "verify.csv"));
    const auto j = json::parse(testutil::slurp(dir / "verify_failures.json"));
    CHECK(j["failures"].empty());
    CHECK(testutil::read_csv(dir / "verify.csv").rows.size() == verify_suite_names().size());
}

} // TEST_SUITE
