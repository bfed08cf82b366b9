#include "aoisim/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aoisim/config_io.hpp"

namespace fs = std::filesystem;

namespace aoisim {

namespace {

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void close_output(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

std::string format_csv_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::vector<std::string> emit_csv(const EmitInputs& inputs, const std::string& out_dir) {
    if (inputs.reports.empty()) {
        throw std::invalid_argument("emit_csv: no reports to write");
    }
    for (const auto& labeled : inputs.reports) {
        if (labeled.report.frames == 0 || labeled.report.avg_aoi_per_frame.empty()) {
            throw std::invalid_argument("emit_csv: empty report");
        }
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

    std::vector<std::string> written;
    const auto record = [&written](const fs::path& path) { written.push_back(path.string()); };

    {
        const fs::path path = fs::path(out_dir) / "aoi_per_frame.csv";
        auto out = open_output(path);
        out << "frame,scheme,avg_aoi\n";
        for (const auto& labeled : inputs.reports) {
            if (!labeled.detail) continue;
            const auto& per_frame = labeled.report.avg_aoi_per_frame;
            for (std::size_t f = 0; f < per_frame.size(); ++f) {
                out << (f + 1) << ',' << scheme_name(labeled.scheme) << ','
                    << format_csv_double(per_frame[f]) << '\n';
            }
        }
        close_output(out, path);
        record(path);
    }

    {
        const fs::path path = fs::path(out_dir) / "grid_usage.csv";
        auto out = open_output(path);
        out << "k,n,scheme,devices_x100\n";
        for (const auto& labeled : inputs.reports) {
            if (!labeled.detail) continue;
            const auto& grid = labeled.report.grid;
            for (int k = 1; k <= grid.level_count; ++k) {
                for (int n = 1; n <= grid.slot_count; ++n) {
                    out << k << ',' << n << ',' << scheme_name(labeled.scheme) << ','
                        << format_csv_double(100.0 * grid.usage_at(k, n)) << '\n';
                }
            }
        }
        close_output(out, path);
        record(path);
    }

    {
        const fs::path path = fs::path(out_dir) / "collision_rate.csv";
        auto out = open_output(path);
        out << "k,n,scheme,percent\n";
        for (const auto& labeled : inputs.reports) {
            if (!labeled.detail) continue;
            const auto& grid = labeled.report.grid;
            for (int k = 1; k <= grid.level_count; ++k) {
                for (int n = 1; n <= grid.slot_count; ++n) {
                    out << k << ',' << n << ',' << scheme_name(labeled.scheme) << ','
                        << format_csv_double(grid.collision_at(k, n)) << '\n';
                }
            }
        }
        close_output(out, path);
        record(path);
    }

    {
        const fs::path path = fs::path(out_dir) / "sweep.csv";
        auto out = open_output(path);
        out << "M,scheme,avg_aoi,throughput\n";
        for (const auto& labeled : inputs.reports) {
            out << labeled.report.device_count << ',' << scheme_name(labeled.scheme) << ','
                << format_csv_double(labeled.report.overall_avg_aoi) << ','
                << format_csv_double(labeled.report.throughput) << '\n';
        }
        close_output(out, path);
        record(path);
    }

    {
        const fs::path path = fs::path(out_dir) / "summary.txt";
        auto out = open_output(path);
        const SimConfig& cfg = inputs.base_config;
        out << "aoisim experiment summary\n";
        out << "source: " << inputs.source << "\n\n";

        out << "theorem 1 lower bound, (N + ceil(M/K))/2: "
            << format_csv_double(
                   theorem1_bound(cfg.slots_per_frame, cfg.device_count, cfg.level_count))
            << " slots\n";
        out << "lemma 1 average AoI when recurrently served in slot n, (N-1)/2 + n:\n";
        for (int n = 1; n <= cfg.slots_per_frame; ++n) {
            out << "  n=" << n << ": " << format_csv_double(lemma1_avg_aoi(cfg.slots_per_frame, n))
                << '\n';
        }
        const PowerLevelSet levels = compute_power_levels(cfg.level_count, cfg.rate);
        out << "power levels P_1..P_K (noise-normalized): ";
        for (std::size_t i = 0; i < levels.levels.size(); ++i) {
            if (i > 0) out << ' ';
            out << format_csv_double(levels.levels[i]);
        }
        out << "\n\n";

        out << "results (trailing window = last "
            << (inputs.reports.front().report.trailing_window) << " frames):\n";
        for (const auto& labeled : inputs.reports) {
            const auto& report = labeled.report;
            out << "  scheme=" << scheme_name(labeled.scheme) << " M=" << report.device_count
                << " avg_aoi=" << format_csv_double(report.overall_avg_aoi)
                << " trailing_avg_aoi=" << format_csv_double(report.trailing_avg_aoi)
                << " throughput=" << format_csv_double(report.throughput)
                << " trailing_throughput=" << format_csv_double(report.trailing_throughput)
                << '\n';
        }
        out << '\n';

        out << "--- config ---\n";
        out << config_to_text(cfg);
        out << "--- end config ---\n";
        close_output(out, path);
        record(path);
    }

    return written;
}

}  // namespace aoisim
