#include "aoisim/core.hpp"

#include <cmath>

namespace aoisim {

void SimConfig::validate() const {
    if (device_count < 1) throw ConfigError("M", "M must be a positive integer");
    if (slots_per_frame < 1) throw ConfigError("N", "N must be a positive integer");
    if (level_count < 1) throw ConfigError("K", "K must be a positive integer");
    if (!(rate > 0.0)) throw ConfigError("R", "R must be positive");
    if (frames < 1) throw ConfigError("F", "F must be a positive integer");
    if (runs < 1) throw ConfigError("runs", "runs must be a positive integer");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("alpha", "alpha must lie in (0, 1]");
    if (!(gamma >= 0.0 && gamma < 1.0)) throw ConfigError("gamma", "gamma must lie in [0, 1)");
    if (static_cast<long long>(device_count) >
        static_cast<long long>(level_count) * slots_per_frame) {
        throw ConfigError("M", "M exceeds K*N: the grid cannot accommodate all devices");
    }
    if (!(exploration.epsilon0 >= 0.0 && exploration.epsilon0 <= 1.0)) {
        throw ConfigError("epsilon0", "epsilon0 must lie in [0, 1]");
    }
    if (!(exploration.decay > 0.0 && exploration.decay <= 1.0)) {
        throw ConfigError("decay", "decay must lie in (0, 1]");
    }
}

PowerLevelSet compute_power_levels(int level_count, double rate) {
    if (level_count < 1) throw ConfigError("K", "K must be a positive integer");
    if (!(rate > 0.0)) throw ConfigError("R", "R must be positive");

    // rho = 2^R - 1 is the SINR each level must clear. Solving the design
    // equations bottom-up: P_K = rho, then P_k = rho * (1 + sum of weaker levels).
    const double rho = std::exp2(rate) - 1.0;
    std::vector<double> levels(static_cast<std::size_t>(level_count));
    double weaker_sum = 0.0;
    for (int k = level_count; k >= 1; --k) {
        const double p = rho * (1.0 + weaker_sum);
        levels[static_cast<std::size_t>(k - 1)] = p;
        weaker_sum += p;
    }
    return PowerLevelSet{std::move(levels)};
}

int min_slots_required(int device_count, int level_count) {
    if (device_count < 1) throw ConfigError("M", "M must be a positive integer");
    if (level_count < 1) throw ConfigError("K", "K must be a positive integer");
    return (device_count + level_count - 1) / level_count;
}

const char* scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::AoiQlNoma: return "AOI_QL_NOMA";
        case Scheme::QlNomaFixed: return "QL_NOMA_FIXED";
        case Scheme::SaNoma: return "SA_NOMA";
        case Scheme::SaNomaRepet: return "SA_NOMA_REPET";
    }
    return "UNKNOWN";
}

bool scheme_from_name(const std::string& name, Scheme& out) {
    if (name == "AOI_QL_NOMA") out = Scheme::AoiQlNoma;
    else if (name == "QL_NOMA_FIXED") out = Scheme::QlNomaFixed;
    else if (name == "SA_NOMA") out = Scheme::SaNoma;
    else if (name == "SA_NOMA_REPET") out = Scheme::SaNomaRepet;
    else return false;
    return true;
}

const char* exploration_kind_name(ExplorationKind kind) {
    switch (kind) {
        case ExplorationKind::GreedyRandomTie: return "GREEDY_RANDOM_TIE";
        case ExplorationKind::EpsilonGreedy: return "EPSILON_GREEDY";
    }
    return "UNKNOWN";
}

bool exploration_kind_from_name(const std::string& name, ExplorationKind& out) {
    if (name == "GREEDY_RANDOM_TIE") out = ExplorationKind::GreedyRandomTie;
    else if (name == "EPSILON_GREEDY") out = ExplorationKind::EpsilonGreedy;
    else return false;
    return true;
}

}  // namespace aoisim
