#pragma once

#include <string>
#include <vector>

#include "aoisim/core.hpp"

namespace aoisim {

// A named experiment: the base configuration, the schemes it compares, and an
// optional device-count sweep.
struct ExperimentPreset {
    std::string name;
    std::string description;
    SimConfig base;
    std::vector<Scheme> schemes;
    std::vector<int> device_sweep;  // empty = single point at base.device_count
};

const std::vector<ExperimentPreset>& experiment_presets();

// Looks a preset up by name; returns false when unknown.
bool preset_by_name(const std::string& name, ExperimentPreset& out);

}  // namespace aoisim
