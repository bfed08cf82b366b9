#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aoisim/core.hpp"

namespace aoisim {

// Flat key=value configuration format. Recognized keys:
//   M, N, K, R, F, runs, alpha, gamma, scheme, master_seed (alias: seed),
//   exploration, epsilon0, decay
// '#' starts a comment; blank lines are skipped; unknown keys are an error.

// Applies one key=value assignment; throws ConfigError naming the key on an
// unknown key or a malformed value.
void apply_config_value(SimConfig& config, const std::string& key, const std::string& value);

// Parses a file and applies `overrides` on top (flags beat file values), then
// validates. `path` may be empty to start from defaults.
SimConfig load_config(const std::optional<std::string>& path,
                      const std::vector<std::pair<std::string, std::string>>& overrides);

// Canonical echo; parsing the returned text reproduces `config` exactly.
std::string config_to_text(const SimConfig& config);

// Shortest decimal representation that parses back to exactly `value`.
std::string format_double_exact(double value);

}  // namespace aoisim
