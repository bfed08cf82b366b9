#include "aoisim/metrics.hpp"

#include <numeric>
#include <stdexcept>

namespace aoisim {

double lemma1_avg_aoi(int slot_count, int slot) {
    if (slot_count < 1) throw std::invalid_argument("lemma1_avg_aoi: N must be positive");
    if (slot < 1 || slot > slot_count) {
        throw std::out_of_range("lemma1_avg_aoi: slot outside 1..N");
    }
    return static_cast<double>(slot_count - 1) / 2.0 + static_cast<double>(slot);
}

double theorem1_bound(int slot_count, int device_count, int level_count) {
    const int needed = min_slots_required(device_count, level_count);
    if (needed > slot_count) {
        throw std::invalid_argument("theorem1_bound: requires ceil(M/K) <= N");
    }
    return (static_cast<double>(slot_count) + static_cast<double>(needed)) / 2.0;
}

double normalized_throughput(std::int64_t delivered, int device_count, std::int64_t frames) {
    if (frames < 1) throw std::invalid_argument("normalized_throughput: no frames");
    if (device_count < 1) throw std::invalid_argument("normalized_throughput: no devices");
    return static_cast<double>(delivered) /
           (static_cast<double>(device_count) * static_cast<double>(frames));
}

int trailing_window_frames(int frames) {
    if (frames < 1) throw std::invalid_argument("trailing_window_frames: no frames");
    return (frames + 9) / 10;
}

AoiTracker::AoiTracker(int device_count, int slot_count)
    : device_count_(device_count),
      slot_count_(slot_count),
      ages_(static_cast<std::size_t>(device_count), 0) {
    if (device_count < 1 || slot_count < 1) {
        throw std::invalid_argument("AoiTracker: dimensions must be positive");
    }
}

void AoiTracker::step(int frame, int slot, const std::vector<int>& delivered) {
    const int expected_frame = (next_slot_ == 1) ? current_frame_ + 1 : current_frame_;
    if (frame != expected_frame || slot != next_slot_) {
        throw std::logic_error("AoiTracker: out-of-order slot processing");
    }
    if (next_slot_ == 1) {
        current_frame_ = frame;
        frame_age_sum_ = 0;
    }

    for (auto& age : ages_) ++age;
    for (int device : delivered) {
        if (device < 0 || device >= device_count_) {
            throw std::out_of_range("AoiTracker: device id out of range");
        }
        ages_[static_cast<std::size_t>(device)] = slot;
    }
    frame_age_sum_ = std::accumulate(ages_.begin(), ages_.end(), frame_age_sum_);

    if (slot == slot_count_) {
        frame_mean_.push_back(static_cast<double>(frame_age_sum_) /
                              (static_cast<double>(device_count_) *
                               static_cast<double>(slot_count_)));
        next_slot_ = 1;
    } else {
        ++next_slot_;
    }
}

double AoiTracker::average_aoi() const {
    return average_aoi(1, completed_frames());
}

double AoiTracker::average_aoi(int first_frame, int last_frame) const {
    if (first_frame < 1 || last_frame > completed_frames() || first_frame > last_frame) {
        throw std::invalid_argument("AoiTracker: empty or invalid frame range");
    }
    double sum = 0.0;
    for (int f = first_frame; f <= last_frame; ++f) {
        sum += frame_mean_[static_cast<std::size_t>(f - 1)];
    }
    return sum / static_cast<double>(last_frame - first_frame + 1);
}

double GridStats::usage_at(int level, int slot) const {
    return usage[static_cast<std::size_t>(level - 1) * static_cast<std::size_t>(slot_count) +
                 static_cast<std::size_t>(slot - 1)];
}

double GridStats::collision_at(int level, int slot) const {
    return collision_percent[static_cast<std::size_t>(level - 1) *
                                 static_cast<std::size_t>(slot_count) +
                             static_cast<std::size_t>(slot - 1)];
}

GridAccumulator::GridAccumulator(int level_count, int slot_count)
    : level_count_(level_count),
      slot_count_(slot_count),
      occupancy_sum_(static_cast<std::size_t>(level_count) * static_cast<std::size_t>(slot_count),
                     0),
      collision_frames_(occupancy_sum_.size(), 0) {}

void GridAccumulator::add_frame(const std::vector<int>& cell_counts) {
    if (cell_counts.size() != occupancy_sum_.size()) {
        throw std::invalid_argument("GridAccumulator: cell count size mismatch");
    }
    for (std::size_t i = 0; i < cell_counts.size(); ++i) {
        occupancy_sum_[i] += cell_counts[i];
        if (cell_counts[i] >= 2) ++collision_frames_[i];
    }
    ++frames_;
}

void GridAccumulator::merge(const GridAccumulator& other) {
    if (other.occupancy_sum_.size() != occupancy_sum_.size()) {
        throw std::invalid_argument("GridAccumulator: merge size mismatch");
    }
    for (std::size_t i = 0; i < occupancy_sum_.size(); ++i) {
        occupancy_sum_[i] += other.occupancy_sum_[i];
        collision_frames_[i] += other.collision_frames_[i];
    }
    frames_ += other.frames_;
}

GridStats GridAccumulator::stats() const {
    if (frames_ == 0) throw std::logic_error("GridAccumulator: no frames accumulated");
    GridStats out;
    out.level_count = level_count_;
    out.slot_count = slot_count_;
    out.usage.resize(occupancy_sum_.size());
    out.collision_percent.resize(occupancy_sum_.size());
    for (std::size_t i = 0; i < occupancy_sum_.size(); ++i) {
        out.usage[i] = static_cast<double>(occupancy_sum_[i]) / static_cast<double>(frames_);
        out.collision_percent[i] =
            100.0 * static_cast<double>(collision_frames_[i]) / static_cast<double>(frames_);
    }
    return out;
}

GridStats grid_stats(const std::vector<std::vector<GridAction>>& frame_actions, int level_count,
                     int slot_count) {
    GridAccumulator acc(level_count, slot_count);
    std::vector<int> counts(static_cast<std::size_t>(level_count) *
                            static_cast<std::size_t>(slot_count));
    for (const auto& actions : frame_actions) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& action : actions) {
            if (action.level < 1 || action.level > level_count || action.slot < 1 ||
                action.slot > slot_count) {
                throw std::out_of_range("grid_stats: action outside the grid");
            }
            ++counts[static_cast<std::size_t>(action.level - 1) *
                         static_cast<std::size_t>(slot_count) +
                     static_cast<std::size_t>(action.slot - 1)];
        }
        acc.add_frame(counts);
    }
    return acc.stats();
}

}  // namespace aoisim
