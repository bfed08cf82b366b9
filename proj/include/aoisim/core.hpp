#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aoisim {

enum class Scheme {
    AoiQlNoma,     // Q-learning with the AoI-aware feedback bit
    QlNomaFixed,   // Q-learning with the plain success/failure bit
    SaNoma,        // slotted ALOHA: one uniform (level, slot) pick per frame
    SaNomaRepet,   // slotted ALOHA with per-slot retransmissions until ACK
};

enum class ExplorationKind {
    GreedyRandomTie,  // argmax with uniform tie-breaking
    EpsilonGreedy,    // epsilon0 * decay^frame exploration probability
};

struct ExplorationPolicy {
    ExplorationKind kind = ExplorationKind::GreedyRandomTie;
    double epsilon0 = 0.0;
    double decay = 1.0;

    bool operator==(const ExplorationPolicy&) const = default;
};

// Raised on any invalid configuration value; `key` names the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(message), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

// The device's committed choice for one frame: power level k and time slot n,
// both 1-based.
struct GridAction {
    int level = 1;
    int slot = 1;

    bool operator==(const GridAction&) const = default;
};

struct SimConfig {
    int device_count = 18;      // M
    int slots_per_frame = 8;    // N
    int level_count = 3;        // K
    double rate = 1.0;          // R, bits/s/Hz
    int frames = 1000;          // F, frames per run
    int runs = 100;
    double alpha = 0.1;         // learning rate
    double gamma = 0.5;         // discount factor
    Scheme scheme = Scheme::AoiQlNoma;
    std::uint64_t master_seed = 1;
    ExplorationPolicy exploration{};

    // Throws ConfigError naming the first offending field. Rejects
    // M > K*N outright: the grid must accommodate every device.
    void validate() const;

    bool operator==(const SimConfig&) const = default;
};

// Received-power targets P_1 > ... > P_K (noise-normalized), each satisfying
// log2(1 + P_k / (1 + sum_{k'>k} P_k')) = rate.
struct PowerLevelSet {
    std::vector<double> levels;
};

PowerLevelSet compute_power_levels(int level_count, double rate);

// ceil(M / K): the fewest slots that fit all devices at K per slot.
int min_slots_required(int device_count, int level_count);

const char* scheme_name(Scheme scheme);
bool scheme_from_name(const std::string& name, Scheme& out);

const char* exploration_kind_name(ExplorationKind kind);
bool exploration_kind_from_name(const std::string& name, ExplorationKind& out);

}  // namespace aoisim
