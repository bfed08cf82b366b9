#include "aoisim/config_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace aoisim {

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

long long parse_integer(const std::string& key, const std::string& value) {
    std::size_t consumed = 0;
    long long parsed = 0;
    try {
        parsed = std::stoll(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError(key, key + ": not an integer: '" + value + "'");
    }
    if (consumed != value.size()) {
        throw ConfigError(key, key + ": not an integer: '" + value + "'");
    }
    return parsed;
}

double parse_real(const std::string& key, const std::string& value) {
    std::size_t consumed = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError(key, key + ": not a number: '" + value + "'");
    }
    if (consumed != value.size()) {
        throw ConfigError(key, key + ": not a number: '" + value + "'");
    }
    return parsed;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::size_t consumed = 0;
    unsigned long long parsed = 0;
    try {
        parsed = std::stoull(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError(key, key + ": not an unsigned integer: '" + value + "'");
    }
    if (consumed != value.size() || value.find('-') != std::string::npos) {
        throw ConfigError(key, key + ": not an unsigned integer: '" + value + "'");
    }
    return parsed;
}

int parse_positive_int(const std::string& key, const std::string& value) {
    const long long parsed = parse_integer(key, value);
    if (parsed < 1 || parsed > 2'000'000'000LL) {
        throw ConfigError(key, key + ": out of range: '" + value + "'");
    }
    return static_cast<int>(parsed);
}

}  // namespace

void apply_config_value(SimConfig& config, const std::string& key, const std::string& value) {
    if (key == "M") {
        config.device_count = parse_positive_int(key, value);
    } else if (key == "N") {
        config.slots_per_frame = parse_positive_int(key, value);
    } else if (key == "K") {
        config.level_count = parse_positive_int(key, value);
    } else if (key == "R") {
        config.rate = parse_real(key, value);
    } else if (key == "F") {
        config.frames = parse_positive_int(key, value);
    } else if (key == "runs") {
        config.runs = parse_positive_int(key, value);
    } else if (key == "alpha") {
        config.alpha = parse_real(key, value);
    } else if (key == "gamma") {
        config.gamma = parse_real(key, value);
    } else if (key == "scheme") {
        Scheme scheme;
        if (!scheme_from_name(value, scheme)) {
            throw ConfigError(key, "scheme: unknown value '" + value +
                                       "' (expected AOI_QL_NOMA, QL_NOMA_FIXED, SA_NOMA or "
                                       "SA_NOMA_REPET)");
        }
        config.scheme = scheme;
    } else if (key == "master_seed" || key == "seed") {
        config.master_seed = parse_u64("master_seed", value);
    } else if (key == "exploration") {
        ExplorationKind kind;
        if (!exploration_kind_from_name(value, kind)) {
            throw ConfigError(key, "exploration: unknown value '" + value +
                                       "' (expected GREEDY_RANDOM_TIE or EPSILON_GREEDY)");
        }
        config.exploration.kind = kind;
    } else if (key == "epsilon0") {
        config.exploration.epsilon0 = parse_real(key, value);
    } else if (key == "decay") {
        config.exploration.decay = parse_real(key, value);
    } else {
        throw ConfigError(key, "unknown configuration key '" + key + "'");
    }
}

SimConfig load_config(const std::optional<std::string>& path,
                      const std::vector<std::pair<std::string, std::string>>& overrides) {
    SimConfig config;
    if (path) {
        std::ifstream in(*path);
        if (!in) throw ConfigError("config", "cannot open config file '" + *path + "'");
        std::string line;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            const auto comment = line.find('#');
            if (comment != std::string::npos) line.erase(comment);
            const std::string trimmed = trim(line);
            if (trimmed.empty()) continue;
            const auto eq = trimmed.find('=');
            if (eq == std::string::npos) {
                throw ConfigError(trimmed, "malformed line " + std::to_string(line_number) +
                                               " in '" + *path + "': expected key=value");
            }
            const std::string key = trim(trimmed.substr(0, eq));
            const std::string value = trim(trimmed.substr(eq + 1));
            if (key.empty()) {
                throw ConfigError(trimmed, "malformed line " + std::to_string(line_number) +
                                               " in '" + *path + "': empty key");
            }
            apply_config_value(config, key, value);
        }
    }
    for (const auto& [key, value] : overrides) {
        apply_config_value(config, key, value);
    }
    config.validate();
    return config;
}

std::string format_double_exact(double value) {
    char buffer[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
        if (std::strtod(buffer, nullptr) == value) break;
    }
    return buffer;
}

std::string config_to_text(const SimConfig& config) {
    std::ostringstream out;
    out << "M=" << config.device_count << '\n';
    out << "N=" << config.slots_per_frame << '\n';
    out << "K=" << config.level_count << '\n';
    out << "R=" << format_double_exact(config.rate) << '\n';
    out << "F=" << config.frames << '\n';
    out << "runs=" << config.runs << '\n';
    out << "alpha=" << format_double_exact(config.alpha) << '\n';
    out << "gamma=" << format_double_exact(config.gamma) << '\n';
    out << "scheme=" << scheme_name(config.scheme) << '\n';
    out << "master_seed=" << config.master_seed << '\n';
    out << "exploration=" << exploration_kind_name(config.exploration.kind) << '\n';
    out << "epsilon0=" << format_double_exact(config.exploration.epsilon0) << '\n';
    out << "decay=" << format_double_exact(config.exploration.decay) << '\n';
    return out.str();
}

}  // namespace aoisim
