// simulate: grant-free NOMA random-access experiments with AoI instrumentation.
//
// Usage:
//   simulate --preset <name> [options]
//   simulate --config <file> [options]
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "aoisim/config_io.hpp"
#include "aoisim/csv.hpp"
#include "aoisim/presets.hpp"
#include "aoisim/sim.hpp"

namespace {

using namespace aoisim;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

void print_usage(std::ostream& out) {
    out << "usage: simulate --preset <name> | --config <file> [options]\n"
           "\n"
           "options:\n"
           "  --preset <name>      run a named experiment preset\n"
           "  --config <file>      run a single simulation from a key=value config file\n"
           "  --scheme <S>         restrict to one scheme (AOI_QL_NOMA, QL_NOMA_FIXED,\n"
           "                       SA_NOMA, SA_NOMA_REPET)\n"
           "  --seed <u64>         master seed (alias for --master_seed)\n"
           "  --runs <n>           independent run count\n"
           "  --out <dir>          output directory (default: $AOISIM_OUT_DIR or ./out)\n"
           "  --threads <n>        worker threads for runs (0 = all cores, default 0)\n"
           "  --M --N --K --R --F --alpha --gamma --master_seed --exploration\n"
           "  --epsilon0 --decay   override any config key\n"
           "  --help               show this help\n"
           "\n"
           "presets:\n";
    for (const auto& preset : experiment_presets()) {
        out << "  " << preset.name << ": " << preset.description << '\n';
    }
    out << "\noutputs: aoi_per_frame.csv, grid_usage.csv, collision_rate.csv, sweep.csv,\n"
           "summary.txt\n";
}

struct CliArgs {
    std::optional<std::string> preset;
    std::optional<std::string> config_path;
    std::optional<std::string> out_dir;
    std::optional<std::string> scheme;
    unsigned threads = 0;
    std::vector<std::pair<std::string, std::string>> overrides;
    bool help = false;
};

const std::vector<std::string> kConfigKeys = {
    "M",     "N",     "K",           "R",           "F",        "runs", "alpha",
    "gamma", "seed",  "master_seed", "exploration", "epsilon0", "decay"};

CliArgs parse_args(int argc, char** argv) {
    CliArgs args;
    for (int i = 1; i < argc; ++i) {
        std::string flag = argv[i];
        if (flag == "--help" || flag == "-h") {
            args.help = true;
            return args;
        }
        std::string value;
        bool has_inline_value = false;
        if (const auto eq = flag.find('='); eq != std::string::npos && flag.rfind("--", 0) == 0) {
            value = flag.substr(eq + 1);
            flag = flag.substr(0, eq);
            has_inline_value = true;
        }
        if (flag.rfind("--", 0) != 0) {
            throw ConfigError(flag, "unexpected argument '" + flag + "'");
        }
        const std::string key = flag.substr(2);
        auto next_value = [&]() -> std::string {
            if (has_inline_value) return value;
            if (i + 1 >= argc) throw ConfigError(key, "flag --" + key + " needs a value");
            return argv[++i];
        };

        if (key == "preset") {
            args.preset = next_value();
        } else if (key == "config") {
            args.config_path = next_value();
        } else if (key == "out") {
            args.out_dir = next_value();
        } else if (key == "scheme") {
            args.scheme = next_value();
        } else if (key == "threads") {
            const std::string v = next_value();
            try {
                args.threads = static_cast<unsigned>(std::stoul(v));
            } catch (const std::exception&) {
                throw ConfigError("threads", "threads: not an unsigned integer: '" + v + "'");
            }
        } else if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) != kConfigKeys.end()) {
            args.overrides.emplace_back(key, next_value());
        } else {
            throw ConfigError(key, "unknown flag '--" + key + "'");
        }
    }
    return args;
}

std::string resolve_out_dir(const CliArgs& args) {
    if (args.out_dir) return *args.out_dir;
    if (const char* env = std::getenv("AOISIM_OUT_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return "out";
}

int run(const CliArgs& args) {
    if ((args.preset && args.config_path) || (!args.preset && !args.config_path)) {
        throw ConfigError("preset", "exactly one of --preset or --config is required");
    }

    EmitInputs inputs;
    const std::string out_dir = resolve_out_dir(args);

    if (args.config_path) {
        auto overrides = args.overrides;
        if (args.scheme) overrides.emplace_back("scheme", *args.scheme);
        const SimConfig config = load_config(args.config_path, overrides);
        inputs.source = "config " + *args.config_path;
        inputs.base_config = config;

        std::cout << "running scheme=" << scheme_name(config.scheme)
                  << " M=" << config.device_count << " N=" << config.slots_per_frame
                  << " K=" << config.level_count << " F=" << config.frames
                  << " runs=" << config.runs << '\n';
        MetricsReport report = run_simulation(config, args.threads);
        std::cout << "  avg_aoi=" << format_csv_double(report.overall_avg_aoi)
                  << " trailing_avg_aoi=" << format_csv_double(report.trailing_avg_aoi)
                  << " throughput=" << format_csv_double(report.throughput) << '\n';
        inputs.reports.push_back({config.scheme, std::move(report), true});
    } else {
        ExperimentPreset preset;
        if (!preset_by_name(*args.preset, preset)) {
            throw ConfigError("preset", "unknown preset '" + *args.preset + "'");
        }
        SimConfig base = preset.base;
        for (const auto& [key, value] : args.overrides) {
            apply_config_value(base, key, value);
        }

        std::vector<Scheme> schemes = preset.schemes;
        if (args.scheme) {
            Scheme scheme;
            if (!scheme_from_name(*args.scheme, scheme)) {
                throw ConfigError("scheme", "unknown scheme '" + *args.scheme + "'");
            }
            schemes = {scheme};
        }

        inputs.source = "preset " + preset.name;
        base.scheme = schemes.front();
        base.validate();
        inputs.base_config = base;

        for (Scheme scheme : schemes) {
            SimConfig config = base;
            config.scheme = scheme;
            if (preset.device_sweep.empty()) {
                std::cout << "running scheme=" << scheme_name(scheme)
                          << " M=" << config.device_count << " runs=" << config.runs << '\n';
                MetricsReport report = run_simulation(config, args.threads);
                std::cout << "  avg_aoi=" << format_csv_double(report.overall_avg_aoi)
                          << " trailing_avg_aoi=" << format_csv_double(report.trailing_avg_aoi)
                          << " throughput=" << format_csv_double(report.throughput) << '\n';
                inputs.reports.push_back({scheme, std::move(report), true});
            } else {
                auto reports = sweep_devices(config, preset.device_sweep, args.threads);
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    std::cout << "scheme=" << scheme_name(scheme)
                              << " M=" << reports[i].device_count
                              << " avg_aoi=" << format_csv_double(reports[i].overall_avg_aoi)
                              << " throughput=" << format_csv_double(reports[i].throughput)
                              << '\n';
                    // Only the saturation point gets per-frame/per-cell rows;
                    // aoi_per_frame.csv has no M column.
                    const bool detail = i + 1 == reports.size();
                    inputs.reports.push_back({scheme, std::move(reports[i]), detail});
                }
            }
        }
    }

    const auto written = emit_csv(inputs, out_dir);
    std::cout << "wrote:\n";
    for (const auto& path : written) std::cout << "  " << path << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const CliArgs args = parse_args(argc, argv);
        if (args.help) {
            print_usage(std::cout);
            return kExitOk;
        }
        return run(args);
    } catch (const ConfigError& e) {
        std::cerr << "config error [" << e.key() << "]: " << e.what() << '\n';
        std::cerr << "run 'simulate --help' for usage\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
