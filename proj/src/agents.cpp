#include "aoisim/agents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aoisim {

QTable::QTable(int level_count, int slot_count)
    : level_count_(level_count),
      slot_count_(slot_count),
      values_(static_cast<std::size_t>(level_count) * static_cast<std::size_t>(slot_count),
              0.0) {
    if (level_count < 1 || slot_count < 1) {
        throw std::invalid_argument("QTable: dimensions must be positive");
    }
}

std::size_t QTable::index(GridAction action) const {
    if (action.level < 1 || action.level > level_count_ || action.slot < 1 ||
        action.slot > slot_count_) {
        throw std::out_of_range("QTable: action out of range");
    }
    return static_cast<std::size_t>(action.level - 1) * static_cast<std::size_t>(slot_count_) +
           static_cast<std::size_t>(action.slot - 1);
}

double QTable::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

std::vector<GridAction> QTable::argmax_set() const {
    const double best = max_value();
    std::vector<GridAction> set;
    for (int k = 1; k <= level_count_; ++k) {
        for (int n = 1; n <= slot_count_; ++n) {
            if (values_[index({k, n})] == best) set.push_back({k, n});
        }
    }
    return set;
}

FeedbackVector feedback_bits(const std::vector<SlotOutcome>& outcomes, int device_count,
                             int level_count, RewardKind kind) {
    const int slot_count = static_cast<int>(outcomes.size());
    if (slot_count == 0) throw std::invalid_argument("feedback_bits: no slot outcomes");

    std::vector<const SlotOutcome*> by_slot(static_cast<std::size_t>(slot_count), nullptr);
    for (const auto& outcome : outcomes) {
        if (outcome.slot < 1 || outcome.slot > slot_count) {
            throw std::invalid_argument("feedback_bits: slot index outside 1..N");
        }
        auto& entry = by_slot[static_cast<std::size_t>(outcome.slot - 1)];
        if (entry != nullptr) throw std::invalid_argument("feedback_bits: duplicated slot index");
        entry = &outcome;
    }

    const int slot_threshold = min_slots_required(device_count, level_count);
    FeedbackVector bits(static_cast<std::size_t>(slot_count), 0);
    for (int n = 1; n <= slot_count; ++n) {
        const SlotOutcome& outcome = *by_slot[static_cast<std::size_t>(n - 1)];
        const bool within = (kind == RewardKind::Fixed) || n <= slot_threshold;
        bits[static_cast<std::size_t>(n - 1)] = (outcome.sic_success && within) ? 1 : 0;
    }
    return bits;
}

double reward_from_bit(int bit) {
    return 2.0 * static_cast<double>(bit) - 1.0;
}

void q_update(QTable& table, GridAction action, double reward, double alpha, double gamma) {
    const double bootstrap = table.max_value();
    const double updated =
        (1.0 - alpha) * table.at(action) + alpha * (reward + gamma * bootstrap);
    table.set(action, updated);
}

namespace {

GridAction pick_uniform(int level_count, int slot_count, Rng& rng) {
    const auto cell = uniform_index(
        rng, static_cast<std::uint64_t>(level_count) * static_cast<std::uint64_t>(slot_count));
    return {static_cast<int>(cell) / slot_count + 1, static_cast<int>(cell) % slot_count + 1};
}

GridAction pick_greedy(const QTable& table, Rng& rng) {
    const auto ties = table.argmax_set();
    return ties[uniform_index(rng, ties.size())];
}

}  // namespace

GridAction select_action(const QTable& table, const ExplorationPolicy& policy, int frame,
                         Rng& rng) {
    if (policy.kind == ExplorationKind::EpsilonGreedy) {
        const double epsilon = policy.epsilon0 * std::pow(policy.decay, frame);
        if (uniform_unit(rng) < epsilon) {
            return pick_uniform(table.level_count(), table.slot_count(), rng);
        }
    }
    return pick_greedy(table, rng);
}

GridAction sa_noma_select(int level_count, int slot_count, Rng& rng) {
    return pick_uniform(level_count, slot_count, rng);
}

std::optional<int> sa_repet_step(const SaRepetAgent& agent, int device_count, int level_count,
                                 Rng& rng) {
    if (agent.acked) return std::nullopt;
    const double tx_probability =
        static_cast<double>(level_count) / static_cast<double>(device_count);
    if (uniform_unit(rng) >= tx_probability) return std::nullopt;
    return static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(level_count))) + 1;
}

}  // namespace aoisim
