#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "aoisim/core.hpp"
#include "aoisim/metrics.hpp"

namespace aoisim {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LabeledReport {
    Scheme scheme;
    MetricsReport report;
    // Full per-frame and per-cell rows are emitted only for detail reports;
    // sweep points contribute to sweep.csv regardless.
    bool detail = true;
};

struct EmitInputs {
    std::string source;  // human-readable origin, e.g. "preset fig3_aoi_vs_frame"
    SimConfig base_config;
    std::vector<LabeledReport> reports;
};

// Writes aoi_per_frame.csv, grid_usage.csv, collision_rate.csv, sweep.csv and
// summary.txt into `out_dir` (created if missing). Floats carry 6 significant
// digits, lines end with LF, every file starts with a header row. Throws
// std::invalid_argument on an empty report set and IoError on write failures.
std::vector<std::string> emit_csv(const EmitInputs& inputs, const std::string& out_dir);

// 6-significant-digit float formatting shared by all CSV writers.
std::string format_csv_double(double value);

}  // namespace aoisim
