#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aoisim/channel.hpp"
#include "aoisim/core.hpp"
#include "aoisim/rng.hpp"

namespace aoisim {

// Per-device K x N table of action values, zero-initialized.
class QTable {
public:
    QTable(int level_count, int slot_count);

    int level_count() const { return level_count_; }
    int slot_count() const { return slot_count_; }

    double at(GridAction action) const { return values_[index(action)]; }
    void set(GridAction action, double value) { values_[index(action)] = value; }

    double max_value() const;
    // All actions whose value equals max_value(), exact comparison, in
    // (level, slot) row-major order.
    std::vector<GridAction> argmax_set() const;

    const std::vector<double>& values() const { return values_; }

private:
    std::size_t index(GridAction action) const;

    int level_count_;
    int slot_count_;
    std::vector<double> values_;
};

enum class RewardKind {
    AoiAware,  // bit 1 only when the slot decoded and n <= ceil(M/K)
    Fixed,     // bit 1 whenever the slot decoded
};

// One broadcast bit per slot, indexed 0..N-1 for slots 1..N.
using FeedbackVector = std::vector<std::uint8_t>;

// End-of-frame broadcast. `outcomes` must cover slots 1..N exactly once (any
// order); the returned vector is indexed by slot.
FeedbackVector feedback_bits(const std::vector<SlotOutcome>& outcomes, int device_count,
                             int level_count, RewardKind kind);

// bit 1 -> +1, bit 0 -> -1.
double reward_from_bit(int bit);

// Single-state Q-learning update: the bootstrap max is taken over the agent's
// own table before the write. Touches exactly one entry.
void q_update(QTable& table, GridAction action, double reward, double alpha, double gamma);

GridAction select_action(const QTable& table, const ExplorationPolicy& policy, int frame,
                         Rng& rng);

// One uniform (level, slot) draw over the grid.
GridAction sa_noma_select(int level_count, int slot_count, Rng& rng);

struct SaRepetAgent {
    bool acked = false;
};

// Per-slot decision for the repetition baseline: while unACKed, transmit with
// probability K/M at a power level drawn uniformly from 1..K. Returns the
// level, or nullopt when silent. Consumes one uniform draw when deciding and
// one more when transmitting.
std::optional<int> sa_repet_step(const SaRepetAgent& agent, int device_count, int level_count,
                                 Rng& rng);

}  // namespace aoisim
