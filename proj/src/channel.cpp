#include "aoisim/channel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace aoisim {

SlotOutcome decode_slot(const SlotTransmissions& tx) {
    std::set<int> seen_devices;
    std::map<int, int> level_counts;
    for (const auto& [device, level] : tx.entries) {
        if (level < 1) throw std::invalid_argument("decode_slot: power level index must be >= 1");
        if (!seen_devices.insert(device).second) {
            throw std::invalid_argument("decode_slot: duplicate device id in one slot");
        }
        ++level_counts[level];
    }

    SlotOutcome outcome;
    outcome.slot = tx.slot;
    for (const auto& [level, count] : level_counts) {
        if (count >= 2) outcome.colliding_levels.push_back(level);
    }
    outcome.sic_success = outcome.colliding_levels.empty();
    if (outcome.sic_success) {
        outcome.delivered.assign(seen_devices.begin(), seen_devices.end());
    }
    return outcome;
}

}  // namespace aoisim
