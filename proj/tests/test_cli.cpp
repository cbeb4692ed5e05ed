#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "config.hpp"
#include "tasks.hpp"
#include "toml.hpp"

using namespace wqed::cli;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path make_temp_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("wqed_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const char* kSpectrumConfig = R"(
task = "spectrum"
omega0 = 1.0

[scheme]
type = "driven_lambda"
E2 = 1.0
Delta = 0.1
Omega = 0.1
Gamma = 0.1

[grid]
min = 0.8
max = 1.2
count = 101

[output]
csv = "out.csv"
)";

}  // namespace

TEST_CASE("toml reader: values, arrays, comments") {
    const auto doc = parse_toml(R"(
# top comment
title = "run"   # trailing comment
count = 42
ratio = 0.5
negative = -1.25e-3
flag = true
values = [1.0, 2.5, -3.0]

[section]
key = "nested"
)");
    CHECK(doc["title"] == "run");
    CHECK(doc["count"] == 42);
    CHECK(doc["ratio"] == 0.5);
    CHECK(doc["negative"] == -1.25e-3);
    CHECK(doc["flag"] == true);
    CHECK(doc["values"].size() == 3);
    CHECK(doc["values"][1] == 2.5);
    CHECK(doc["section"]["key"] == "nested");
}

TEST_CASE("toml reader: malformed input is rejected with line numbers") {
    CHECK_THROWS_AS(parse_toml("key"), ConfigError);
    CHECK_THROWS_AS(parse_toml("key ="), ConfigError);
    CHECK_THROWS_AS(parse_toml("[unterminated"), ConfigError);
    CHECK_THROWS_AS(parse_toml("a = 1\na = 2"), ConfigError);
    CHECK_THROWS_AS(parse_toml("a = [1, 2"), ConfigError);
    CHECK_THROWS_AS(parse_toml("a = one"), ConfigError);
    try {
        parse_toml("ok = 1\nbroken line\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("config schema: happy path resolves defaults") {
    const RunConfig run = parse_config(parse_toml(kSpectrumConfig));
    CHECK(run.task == "spectrum");
    CHECK(run.omega_grid.size() == 101);
    CHECK(run.omega_grid.front() == 0.8);
    CHECK(run.omega_grid.back() == 1.2);
    CHECK(run.csv_name == "out.csv");
    CHECK(run.threads == 1);
    // defaults recorded for the sidecar round trip
    CHECK(run.resolved["scheme"]["gamma2"] == 0.0);
    CHECK(run.resolved["scheme"]["gamma3"] == 0.0);
}

TEST_CASE("config schema: unknown fields and bad values are rejected") {
    auto doc = parse_toml(kSpectrumConfig);
    doc["scheme"]["typo"] = 1.0;
    CHECK_THROWS_WITH_AS(parse_config(doc), "unknown key 'typo' in section [scheme]",
                         ConfigError);

    doc = parse_toml(kSpectrumConfig);
    doc["mystery"] = nlohmann::json::object();
    CHECK_THROWS_AS(parse_config(doc), ConfigError);

    doc = parse_toml(kSpectrumConfig);
    doc["grid"]["count"] = 0;
    try {
        parse_config(doc);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("grid must be nonempty") != std::string::npos);
    }

    doc = parse_toml(kSpectrumConfig);
    doc["grid"].erase("max");
    CHECK_THROWS_AS(parse_config(doc), ConfigError);

    doc = parse_toml(kSpectrumConfig);
    doc["task"] = "simulate";
    CHECK_THROWS_AS(parse_config(doc), ConfigError);

    doc = parse_toml(kSpectrumConfig);
    doc["scheme"]["Gamma"] = -0.1;
    CHECK_THROWS_AS(parse_config(doc), ConfigError);

    doc = parse_toml(kSpectrumConfig);
    doc["task"] = "switch-map";
    CHECK_THROWS_AS(parse_config(doc), ConfigError);  // spectrum scheme, missing [switch]
}

TEST_CASE("run: spectrum task writes CSV and sidecar; reruns are byte identical") {
    const fs::path dir = make_temp_dir("spectrum");
    const RunConfig run_config = parse_config(parse_toml(kSpectrumConfig));
    const TaskOutput first = run(run_config, dir.string());

    const std::string csv = read_file(first.csv_path);
    CHECK(csv.rfind("omega,re_t,im_t,re_r,im_r,transmission,reflection,loss\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 102);  // header + 101 rows

    const fs::path dir2 = make_temp_dir("spectrum2");
    const TaskOutput second = run(run_config, dir2.string());
    CHECK(read_file(second.csv_path) == csv);

    // The sidecar fed back as a config reproduces the bytes.
    const nlohmann::json meta = nlohmann::json::parse(read_file(first.meta_path));
    CHECK(meta["task"] == "spectrum");
    const RunConfig replay = parse_config(meta["config"]);
    const fs::path dir3 = make_temp_dir("spectrum3");
    const TaskOutput third = run(replay, dir3.string());
    CHECK(read_file(third.csv_path) == csv);

    fs::remove_all(dir);
    fs::remove_all(dir2);
    fs::remove_all(dir3);
}

TEST_CASE("run_file: exit codes for config, numerical and io failures") {
    const fs::path dir = make_temp_dir("exitcodes");
    std::ostringstream err;

    SUBCASE("missing config file is an io error") {
        CHECK(run_file((dir / "nope.toml").string(), dir.string(), {}, {}, {}, err) == kExitIo);
        CHECK(err.str().find("\"type\":\"io\"") != std::string::npos);
    }

    SUBCASE("invalid config exits 2 with a machine-readable record") {
        const fs::path bad = dir / "bad.toml";
        std::ofstream(bad) << "task = \"spectrum\"\n";
        CHECK(run_file(bad.string(), dir.string(), {}, {}, {}, err) == kExitConfig);
        CHECK(err.str().find("\"error\"") != std::string::npos);
        CHECK(err.str().find("\"type\":\"config\"") != std::string::npos);
    }

    SUBCASE("task mismatch against the subcommand exits 2") {
        const fs::path ok = dir / "ok.toml";
        std::ofstream(ok) << kSpectrumConfig;
        CHECK(run_file(ok.string(), dir.string(), {}, {}, std::string("bands"), err) ==
              kExitConfig);
    }

    SUBCASE("degenerate denominator surfaces as a numerical error (exit 3)") {
        // Omega = 0 makes omega = E2 - Delta an exact 0/0 of the closed
        // form; 0.5 and 1.0 are dyadic so the cancellation is exact.
        const fs::path degenerate = dir / "degenerate.toml";
        std::ofstream(degenerate) << R"(
task = "spectrum"
[scheme]
type = "driven_lambda"
E2 = 1.0
Delta = 0.5
Omega = 0.0
Gamma = 0.1
[grid]
min = 0.5
max = 0.5
count = 1
[output]
csv = "x.csv"
)";
        CHECK(run_file(degenerate.string(), dir.string(), {}, {}, {}, err) == kExitNumerical);
        CHECK(err.str().find("\"type\":\"numerical\"") != std::string::npos);
    }

    SUBCASE("unwritable output path exits 4") {
        const fs::path ok = dir / "ok.toml";
        std::ofstream(ok) << kSpectrumConfig;
        CHECK(run_file(ok.string(), "/proc/definitely/not/writable", {}, {}, {}, err) ==
              kExitIo);
    }

    fs::remove_all(dir);
}

TEST_CASE("run_file: seed and thread overrides land in the resolved config") {
    const fs::path dir = make_temp_dir("overrides");
    const fs::path cfg = dir / "loc.toml";
    std::ofstream(cfg) << R"(
task = "localization"
[scheme]
type = "two_level"
omega0 = 1.0
Gamma = 0.1
[grid]
min = 0.9
max = 0.95
count = 3
[disorder]
n_emitters = 12
n_realizations = 4
d_min = 0.4
d_max = 0.6
seed = 7
[output]
csv = "loc.csv"
)";
    std::ostringstream err;
    REQUIRE(run_file(cfg.string(), dir.string(), 2, 99, std::string("localization"), err) ==
            kExitOk);
    const nlohmann::json meta = nlohmann::json::parse(read_file(dir / "loc.meta.json"));
    CHECK(meta["config"]["disorder"]["seed"] == 99);
    CHECK(meta["config"]["threads"] == 2);

    // Same seed override through a fresh run gives identical bytes.
    const std::string csv = read_file(dir / "loc.csv");
    const fs::path dir2 = make_temp_dir("overrides2");
    REQUIRE(run_file(cfg.string(), dir2.string(), 1, 99, std::string("localization"), err) ==
            kExitOk);
    CHECK(read_file(dir2 / "loc.csv") == csv);

    fs::remove_all(dir);
    fs::remove_all(dir2);
}

TEST_CASE("csv schemas match the documented headers") {
    const fs::path dir = make_temp_dir("schemas");

    const auto run_snippet = [&](const std::string& text) {
        const RunConfig config = parse_config(parse_toml(text));
        return read_file(run(config, dir.string()).csv_path);
    };

    const std::string bands = run_snippet(R"(
task = "bands"
[scheme]
type = "two_level"
omega0 = 1.0
Gamma = 0.1
[grid]
min = 0.9
max = 1.1
count = 21
[lattice]
d = 0.5
[output]
csv = "bands.csv"
)");
    CHECK(bands.rfind("omega,kind,kappa,attenuation,absorption\n", 0) == 0);
    CHECK(bands.find(",inf,") != std::string::npos);  // perfect reflector at omega0

    const std::string dos = run_snippet(R"(
task = "dos"
[scheme]
type = "two_level"
omega0 = 1.0
gamma = 0.02
Gamma = 0.1
[grid]
min = 0.9
max = 1.1
count = 21
[lattice]
d = 0.5
x0 = 0.5
[output]
csv = "dos.csv"
)");
    CHECK(dos.rfind("omega,density\n", 0) == 0);

    const std::string sw = run_snippet(R"(
task = "switch-map"
[scheme]
type = "driven_v"
E2 = 1.0
Delta = 0.0
Omega = 0.2
Gamma = 0.1
[switch]
gamma_min = 0.0
gamma_max = 0.1
gamma_count = 2
sigma_min = 0.01
sigma_max = 0.02
sigma_count = 2
[output]
csv = "switch.csv"
)");
    CHECK(sw.rfind("gamma,sigma,p_switch,p_coherent,p_loss\n", 0) == 0);
    CHECK(std::count(sw.begin(), sw.end(), '\n') == 5);

    const std::string drive = run_snippet(R"(
task = "xi-vs-drive"
[scheme]
type = "driven_lambda"
E2 = 1.0
Delta = 0.3
Omega = 0.0
Gamma = 0.1
[disorder]
n_emitters = 10
n_realizations = 3
d_min = 0.4
d_max = 0.6
seed = 5
[drive]
omega = 0.86
Omega_min = 0.05
Omega_max = 0.1
Omega_count = 2
[output]
csv = "drive.csv"
)");
    CHECK(drive.rfind("Omega,inv_xi_mean,inv_xi_stderr,n_divergent\n", 0) == 0);

    fs::remove_all(dir);
}
