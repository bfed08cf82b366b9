#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "aoisim/config_io.hpp"
#include "aoisim/csv.hpp"
#include "aoisim/presets.hpp"
#include "aoisim/sim.hpp"
#include "doctest.h"

using namespace aoisim;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("aoisim_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("load_config: flags override file values") {
    const auto dir = temp_dir("override");
    const auto path = write_file(dir, "sim.cfg", "M=18\nN=8\nK=3\n");
    const auto config = load_config(path.string(), {{"M", "20"}});
    CHECK(config.device_count == 20);
    CHECK(config.slots_per_frame == 8);
    fs::remove_all(dir);
}

TEST_CASE("load_config: validation errors name the offending key") {
    const auto dir = temp_dir("badalpha");
    const auto path = write_file(dir, "sim.cfg", "alpha=1.5\n");
    try {
        load_config(path.string(), {});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "alpha");
    }
    fs::remove_all(dir);
}

TEST_CASE("load_config: unknown keys are rejected") {
    const auto dir = temp_dir("unknown");
    const auto path = write_file(dir, "sim.cfg", "M=6\nfoo=1\n");
    try {
        load_config(path.string(), {});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "foo");
    }
    fs::remove_all(dir);
}

TEST_CASE("load_config: malformed lines and missing files") {
    const auto dir = temp_dir("malformed");
    const auto path = write_file(dir, "sim.cfg", "M=6\nnot a line\n");
    CHECK_THROWS_AS(load_config(path.string(), {}), ConfigError);
    CHECK_THROWS_AS(load_config((dir / "absent.cfg").string(), {}), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("load_config: comments, whitespace and value parsing") {
    const auto dir = temp_dir("parse");
    const auto path = write_file(dir, "sim.cfg",
                                 "# experiment\n"
                                 "  M = 12  # trailing comment\n"
                                 "scheme=SA_NOMA\n"
                                 "master_seed=42\n"
                                 "\n");
    const auto config = load_config(path.string(), {});
    CHECK(config.device_count == 12);
    CHECK(config.scheme == Scheme::SaNoma);
    CHECK(config.master_seed == 42);

    CHECK_THROWS_AS(load_config(path.string(), {{"F", "1.5"}}), ConfigError);
    CHECK_THROWS_AS(load_config(path.string(), {{"scheme", "BOGUS"}}), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("config echo round-trips to the identical SimConfig") {
    SimConfig config;
    config.device_count = 9;
    config.slots_per_frame = 5;
    config.level_count = 2;
    config.rate = 1.75;
    config.frames = 321;
    config.runs = 7;
    config.alpha = 0.3;
    config.gamma = 0.45;
    config.scheme = Scheme::SaNomaRepet;
    config.master_seed = 0xDEADBEEFCAFEULL;
    config.exploration = {ExplorationKind::EpsilonGreedy, 0.1, 0.995};

    const auto dir = temp_dir("roundtrip");
    const auto path = write_file(dir, "echo.cfg", config_to_text(config));
    const auto parsed = load_config(path.string(), {});
    CHECK(parsed == config);
    fs::remove_all(dir);
}

TEST_CASE("presets match the published parameter sets") {
    ExperimentPreset preset;
    REQUIRE(preset_by_name("fig3_aoi_vs_frame", preset));
    CHECK(preset.base.slots_per_frame == 8);
    CHECK(preset.base.level_count == 3);
    CHECK(preset.base.device_count == 18);
    CHECK(preset.base.alpha == 0.1);
    CHECK(preset.base.gamma == 0.5);
    CHECK(preset.base.frames == 1000);
    CHECK(preset.base.runs == 1000);
    CHECK(preset.schemes.size() == 4);
    CHECK(preset.device_sweep.empty());

    for (const char* name : {"fig4_grid_usage", "fig5_collision_rate"}) {
        ExperimentPreset p;
        REQUIRE(preset_by_name(name, p));
        CHECK(p.base == preset.base);
    }

    ExperimentPreset sweep;
    REQUIRE(preset_by_name("fig6_sweep", sweep));
    CHECK(sweep.base.slots_per_frame == 100);
    CHECK(sweep.base.level_count == 3);
    CHECK(sweep.base.frames == 10000);
    CHECK(sweep.base.runs == 10);
    REQUIRE_FALSE(sweep.device_sweep.empty());
    CHECK(sweep.device_sweep.back() == 300);  // saturation M = K*N
    for (int devices : sweep.device_sweep) {
        CHECK(devices <= sweep.base.level_count * sweep.base.slots_per_frame);
    }

    ExperimentPreset missing;
    CHECK_FALSE(preset_by_name("fig7", missing));
}

TEST_CASE("emit_csv writes the full file set with headers") {
    SimConfig config;
    config.device_count = 4;
    config.slots_per_frame = 4;
    config.level_count = 2;
    config.frames = 60;
    config.runs = 2;
    config.scheme = Scheme::AoiQlNoma;
    const auto report = run_simulation(config, 1);

    EmitInputs inputs;
    inputs.source = "test";
    inputs.base_config = config;
    inputs.reports.push_back({config.scheme, report, true});

    const auto dir = temp_dir("emit");
    const auto written = emit_csv(inputs, (dir / "out").string());
    CHECK(written.size() == 5);

    const std::string aoi = read_file(dir / "out" / "aoi_per_frame.csv");
    CHECK(aoi.rfind("frame,scheme,avg_aoi\n", 0) == 0);
    CHECK(aoi.find("\r") == std::string::npos);
    // one header + F rows
    CHECK(std::count(aoi.begin(), aoi.end(), '\n') == 1 + config.frames);

    CHECK(read_file(dir / "out" / "grid_usage.csv").rfind("k,n,scheme,devices_x100\n", 0) == 0);
    CHECK(read_file(dir / "out" / "collision_rate.csv").rfind("k,n,scheme,percent\n", 0) == 0);
    CHECK(read_file(dir / "out" / "sweep.csv").rfind("M,scheme,avg_aoi,throughput\n", 0) == 0);

    const std::string summary = read_file(dir / "out" / "summary.txt");
    CHECK(summary.find("--- config ---") != std::string::npos);

    // The config block embedded in summary.txt parses back to the same config.
    const auto begin = summary.find("--- config ---\n") + std::string("--- config ---\n").size();
    const auto end = summary.find("--- end config ---");
    const auto echoed = write_file(dir, "echo.cfg", summary.substr(begin, end - begin));
    CHECK(load_config(echoed.string(), {}) == config);
    fs::remove_all(dir);
}

TEST_CASE("emit_csv output is byte-identical across invocations") {
    SimConfig config;
    config.device_count = 6;
    config.slots_per_frame = 4;
    config.level_count = 2;
    config.frames = 50;
    config.runs = 3;
    config.scheme = Scheme::SaNoma;

    EmitInputs inputs;
    inputs.source = "determinism";
    inputs.base_config = config;
    inputs.reports.push_back({config.scheme, run_simulation(config, 1), true});

    const auto dir = temp_dir("twice");
    emit_csv(inputs, (dir / "a").string());
    inputs.reports[0].report = run_simulation(config, 2);  // recompute, different threads
    emit_csv(inputs, (dir / "b").string());

    for (const char* name : {"aoi_per_frame.csv", "grid_usage.csv", "collision_rate.csv",
                             "sweep.csv", "summary.txt"}) {
        CHECK(read_file(dir / "a" / name) == read_file(dir / "b" / name));
    }
    fs::remove_all(dir);
}

TEST_CASE("emit_csv rejects empty inputs") {
    EmitInputs inputs;
    inputs.source = "empty";
    const auto dir = temp_dir("empty");
    CHECK_THROWS_AS(emit_csv(inputs, (dir / "out").string()), std::invalid_argument);
    CHECK_FALSE(fs::exists(dir / "out" / "aoi_per_frame.csv"));
    fs::remove_all(dir);
}

TEST_CASE("format_csv_double uses 6 significant digits") {
    CHECK(format_csv_double(1.0 / 3.0) == "0.333333");
    CHECK(format_csv_double(7.0) == "7");
    CHECK(format_csv_double(123456.7) == "123457");
}
