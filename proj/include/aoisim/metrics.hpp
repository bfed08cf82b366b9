#pragma once

#include <cstdint>
#include <vector>

#include "aoisim/core.hpp"

namespace aoisim {

// Closed-form average AoI of a device recurrently served in slot n of an
// N-slot frame: (N - 1) / 2 + n.
double lemma1_avg_aoi(int slot_count, int slot);

// Lower bound on the network average AoI: (N + ceil(M/K)) / 2, valid for
// ceil(M/K) <= N.
double theorem1_bound(int slot_count, int device_count, int level_count);

// Fraction of per-frame packets that reached the gateway.
double normalized_throughput(std::int64_t delivered, int device_count, std::int64_t frames);

// Trailing analysis window: the last 10% of frames (at least one).
int trailing_window_frames(int frames);

// Per-device instantaneous age in slot units, advanced slot by slot.
//
// Age is sampled at the end of each slot; a delivery in slot n sets the
// device's age to n within that slot, otherwise the age grows by one, carrying
// over frame boundaries. Ages start from zero history, so an undelivered
// device reads ages 1, 2, 3, ... from the first slot on.
class AoiTracker {
public:
    AoiTracker(int device_count, int slot_count);

    // Slots must arrive in order n = 1..N within each frame, frames in order
    // f = 1, 2, ...; `delivered` holds the ids recovered in this slot.
    void step(int frame, int slot, const std::vector<int>& delivered);

    int device_count() const { return device_count_; }
    int slot_count() const { return slot_count_; }
    int completed_frames() const { return static_cast<int>(frame_mean_.size()); }

    std::int64_t age(int device) const { return ages_[static_cast<std::size_t>(device)]; }

    // Mean age over devices and slots, one value per completed frame.
    const std::vector<double>& frame_mean_aoi() const { return frame_mean_; }

    // Mean over all observation points of all completed frames.
    double average_aoi() const;
    // Same, restricted to frames first..last (1-based, inclusive).
    double average_aoi(int first_frame, int last_frame) const;

private:
    int device_count_;
    int slot_count_;
    int current_frame_ = 0;
    int next_slot_ = 1;
    std::vector<std::int64_t> ages_;
    std::int64_t frame_age_sum_ = 0;
    std::vector<double> frame_mean_;
};

// Average occupancy and collision percentage per grid cell, (level, slot)
// row-major with 1-based indices mapping to (level-1)*N + (slot-1).
struct GridStats {
    int level_count = 0;
    int slot_count = 0;
    std::vector<double> usage;              // mean devices per cell per frame
    std::vector<double> collision_percent;  // % of frames with >= 2 devices in the cell

    double usage_at(int level, int slot) const;
    double collision_at(int level, int slot) const;
};

// Streaming accumulator behind GridStats; integer sums keep the reduction
// exact and order-independent.
class GridAccumulator {
public:
    GridAccumulator() = default;
    GridAccumulator(int level_count, int slot_count);

    // `cell_counts` holds the number of devices per cell for one frame.
    void add_frame(const std::vector<int>& cell_counts);
    void merge(const GridAccumulator& other);

    std::int64_t frames() const { return frames_; }
    GridStats stats() const;

private:
    int level_count_ = 0;
    int slot_count_ = 0;
    std::int64_t frames_ = 0;
    std::vector<std::int64_t> occupancy_sum_;
    std::vector<std::int64_t> collision_frames_;
};

// Grid statistics from an explicit per-frame action log (one GridAction per
// transmission attempt).
GridStats grid_stats(const std::vector<std::vector<GridAction>>& frame_actions, int level_count,
                     int slot_count);

// Aggregated results of one simulation (all runs of one config).
struct MetricsReport {
    int device_count = 0;
    int slots_per_frame = 0;
    int level_count = 0;
    int frames = 0;
    int runs = 0;
    int trailing_window = 0;  // frames in the trailing window

    std::vector<double> avg_aoi_per_frame;  // length F, mean across runs
    double overall_avg_aoi = 0.0;
    double trailing_avg_aoi = 0.0;
    std::vector<double> per_run_trailing_aoi;  // length runs

    double throughput = 0.0;  // full run
    double trailing_throughput = 0.0;

    GridStats grid;           // full run
    GridStats trailing_grid;  // trailing window only
};

}  // namespace aoisim
