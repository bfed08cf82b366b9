#include "aoisim/presets.hpp"

namespace aoisim {

namespace {

std::vector<ExperimentPreset> build_presets() {
    const std::vector<Scheme> all_schemes = {Scheme::AoiQlNoma, Scheme::QlNomaFixed,
                                             Scheme::SaNoma, Scheme::SaNomaRepet};

    SimConfig desk;
    desk.device_count = 18;
    desk.slots_per_frame = 8;
    desk.level_count = 3;
    desk.rate = 1.0;
    desk.frames = 1000;
    desk.runs = 1000;
    desk.alpha = 0.1;
    desk.gamma = 0.5;
    desk.scheme = Scheme::AoiQlNoma;
    desk.master_seed = 1;

    SimConfig sweep_base = desk;
    sweep_base.slots_per_frame = 100;
    sweep_base.frames = 10000;
    sweep_base.runs = 10;
    sweep_base.device_count = 300;

    std::vector<int> sweep_points;
    for (int devices = 30; devices <= 300; devices += 30) sweep_points.push_back(devices);

    std::vector<ExperimentPreset> presets;
    presets.push_back({"fig3_aoi_vs_frame",
                       "average AoI per frame for all schemes (N=8, K=3, M=18)", desk,
                       all_schemes,
                       {}});
    presets.push_back({"fig4_grid_usage",
                       "average devices per grid cell for all schemes (N=8, K=3, M=18)", desk,
                       all_schemes,
                       {}});
    presets.push_back({"fig5_collision_rate",
                       "average collision rate per grid cell for all schemes (N=8, K=3, M=18)",
                       desk, all_schemes,
                       {}});
    presets.push_back({"fig6_sweep",
                       "AoI and throughput versus device count (K=3, N=100, F=10^4, 10 runs); "
                       "long-running",
                       sweep_base, all_schemes, sweep_points});
    return presets;
}

}  // namespace

const std::vector<ExperimentPreset>& experiment_presets() {
    static const std::vector<ExperimentPreset> presets = build_presets();
    return presets;
}

bool preset_by_name(const std::string& name, ExperimentPreset& out) {
    for (const auto& preset : experiment_presets()) {
        if (preset.name == name) {
            out = preset;
            return true;
        }
    }
    return false;
}

}  // namespace aoisim
