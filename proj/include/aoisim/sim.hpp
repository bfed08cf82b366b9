#pragma once

#include <cstdint>
#include <vector>

#include "aoisim/agents.hpp"
#include "aoisim/channel.hpp"
#include "aoisim/core.hpp"
#include "aoisim/metrics.hpp"
#include "aoisim/rng.hpp"

namespace aoisim {

// One independent run: per-device agent state, AoI tracking and statistics
// accumulators, driven one frame at a time.
//
// All randomness comes from the run-local stream in a fixed draw order:
// devices are stepped in index order; QL and SA-NOMA devices draw their action
// at frame start, SA-NOMA-REPET devices draw per slot (transmit decision, then
// power level when transmitting).
class RunState {
public:
    RunState(const SimConfig& config, std::uint64_t run_seed);

    // Executes one frame: fresh packets, action commitment, slot-by-slot SIC
    // decoding and AoI stepping, then the end-of-frame feedback broadcast and
    // Q-table updates for the learning schemes.
    void run_frame();

    const SimConfig& config() const { return config_; }
    int completed_frames() const { return frames_done_; }

    const AoiTracker& tracker() const { return tracker_; }
    const QTable& table(int device) const;

    std::int64_t delivered_total() const { return delivered_total_; }
    std::int64_t delivered_trailing() const { return delivered_trailing_; }
    const GridAccumulator& grid_full() const { return grid_full_; }
    const GridAccumulator& grid_trailing() const { return grid_trailing_; }

    // State of the most recent frame, for inspection.
    const std::vector<GridAction>& last_actions() const { return actions_; }
    const FeedbackVector& last_feedback() const { return feedback_; }
    const std::vector<SlotOutcome>& last_outcomes() const { return outcomes_; }

private:
    SimConfig config_;
    Rng rng_;
    bool learning_;
    RewardKind reward_kind_;
    int trailing_start_;  // first frame (1-based) inside the trailing window
    int frames_done_ = 0;

    std::vector<QTable> tables_;
    std::vector<SaRepetAgent> repet_agents_;
    AoiTracker tracker_;
    GridAccumulator grid_full_;
    GridAccumulator grid_trailing_;
    std::int64_t delivered_total_ = 0;
    std::int64_t delivered_trailing_ = 0;

    std::vector<GridAction> actions_;
    FeedbackVector feedback_;
    std::vector<int> cell_counts_;
    std::vector<SlotOutcome> outcomes_;
};

// Runs `config.runs` independent runs (run r seeded with
// derive_run_seed(master_seed, r)) and aggregates them by arithmetic mean in
// run order, so the result does not depend on `threads` (0 = all hardware
// threads).
MetricsReport run_simulation(const SimConfig& config, unsigned threads = 0);

// One report per device count, all other parameters taken from `base`. Every
// point is validated before any simulation starts.
std::vector<MetricsReport> sweep_devices(const SimConfig& base,
                                         const std::vector<int>& device_counts,
                                         unsigned threads = 0);

}  // namespace aoisim
