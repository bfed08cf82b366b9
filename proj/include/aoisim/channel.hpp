#pragma once

#include <utility>
#include <vector>

namespace aoisim {

// Everything transmitted within one time slot: (device id, power-level index)
// pairs. Device ids must be distinct; a device transmits at most once per slot.
struct SlotTransmissions {
    int slot = 1;
    std::vector<std::pair<int, int>> entries;  // (device, level)
};

struct SlotOutcome {
    int slot = 1;
    bool sic_success = true;
    std::vector<int> delivered;         // device ids, ascending
    std::vector<int> colliding_levels;  // levels picked by >= 2 devices, ascending
};

// SIC resolves the slot iff every occupied power level is occupied by exactly
// one device; a doubled level breaks the SINR budget of the whole ladder, so
// decoding is all-or-nothing per slot. An empty slot succeeds vacuously.
SlotOutcome decode_slot(const SlotTransmissions& tx);

}  // namespace aoisim
