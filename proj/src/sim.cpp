#include "aoisim/sim.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace aoisim {

RunState::RunState(const SimConfig& config, std::uint64_t run_seed)
    : config_((config.validate(), config)),
      rng_(run_seed),
      learning_(config.scheme == Scheme::AoiQlNoma || config.scheme == Scheme::QlNomaFixed),
      reward_kind_(config.scheme == Scheme::AoiQlNoma ? RewardKind::AoiAware
                                                      : RewardKind::Fixed),
      trailing_start_(config.frames - trailing_window_frames(config.frames) + 1),
      tracker_(config.device_count, config.slots_per_frame),
      grid_full_(config.level_count, config.slots_per_frame),
      grid_trailing_(config.level_count, config.slots_per_frame),
      cell_counts_(static_cast<std::size_t>(config.level_count) *
                       static_cast<std::size_t>(config.slots_per_frame),
                   0) {
    if (learning_) {
        tables_.reserve(static_cast<std::size_t>(config_.device_count));
        for (int m = 0; m < config_.device_count; ++m) {
            tables_.emplace_back(config_.level_count, config_.slots_per_frame);
        }
    }
    if (config_.scheme == Scheme::SaNomaRepet) {
        repet_agents_.resize(static_cast<std::size_t>(config_.device_count));
    }
    if (config_.scheme != Scheme::SaNomaRepet) {
        actions_.resize(static_cast<std::size_t>(config_.device_count));
    }
}

const QTable& RunState::table(int device) const {
    if (!learning_) throw std::logic_error("RunState: scheme has no Q-tables");
    return tables_.at(static_cast<std::size_t>(device));
}

void RunState::run_frame() {
    const int frame = frames_done_ + 1;
    const int devices = config_.device_count;
    const int slots = config_.slots_per_frame;
    const bool repet = config_.scheme == Scheme::SaNomaRepet;

    std::fill(cell_counts_.begin(), cell_counts_.end(), 0);
    outcomes_.clear();

    // Every device holds a fresh packet; frame-long commitments are drawn now.
    if (learning_) {
        for (int m = 0; m < devices; ++m) {
            actions_[static_cast<std::size_t>(m)] =
                select_action(tables_[static_cast<std::size_t>(m)], config_.exploration,
                              frames_done_, rng_);
        }
    } else if (config_.scheme == Scheme::SaNoma) {
        for (int m = 0; m < devices; ++m) {
            actions_[static_cast<std::size_t>(m)] =
                sa_noma_select(config_.level_count, slots, rng_);
        }
    } else {
        for (auto& agent : repet_agents_) agent.acked = false;
    }

    if (!repet) {
        for (const auto& action : actions_) {
            ++cell_counts_[static_cast<std::size_t>(action.level - 1) *
                               static_cast<std::size_t>(slots) +
                           static_cast<std::size_t>(action.slot - 1)];
        }
    }

    std::int64_t frame_delivered = 0;
    SlotTransmissions tx;
    for (int n = 1; n <= slots; ++n) {
        tx.slot = n;
        tx.entries.clear();
        if (repet) {
            for (int m = 0; m < devices; ++m) {
                const auto level = sa_repet_step(repet_agents_[static_cast<std::size_t>(m)],
                                                 devices, config_.level_count, rng_);
                if (level) {
                    tx.entries.emplace_back(m, *level);
                    ++cell_counts_[static_cast<std::size_t>(*level - 1) *
                                       static_cast<std::size_t>(slots) +
                                   static_cast<std::size_t>(n - 1)];
                }
            }
        } else {
            for (int m = 0; m < devices; ++m) {
                const auto& action = actions_[static_cast<std::size_t>(m)];
                if (action.slot == n) tx.entries.emplace_back(m, action.level);
            }
        }

        SlotOutcome outcome = decode_slot(tx);
        tracker_.step(frame, n, outcome.delivered);
        frame_delivered += static_cast<std::int64_t>(outcome.delivered.size());
        if (repet) {
            // ACK lands at slot end; the device stays silent for the rest of
            // the frame.
            for (int device : outcome.delivered) {
                repet_agents_[static_cast<std::size_t>(device)].acked = true;
            }
        }
        outcomes_.push_back(std::move(outcome));
    }

    if (learning_) {
        feedback_ =
            feedback_bits(outcomes_, devices, config_.level_count, reward_kind_);
        for (int m = 0; m < devices; ++m) {
            const auto& action = actions_[static_cast<std::size_t>(m)];
            const int bit = feedback_[static_cast<std::size_t>(action.slot - 1)];
            q_update(tables_[static_cast<std::size_t>(m)], action, reward_from_bit(bit),
                     config_.alpha, config_.gamma);
        }
    }

    grid_full_.add_frame(cell_counts_);
    delivered_total_ += frame_delivered;
    if (frame >= trailing_start_ && frame <= config_.frames) {
        grid_trailing_.add_frame(cell_counts_);
        delivered_trailing_ += frame_delivered;
    }
    frames_done_ = frame;
}

namespace {

struct RunResult {
    std::vector<double> frame_mean_aoi;
    double trailing_aoi = 0.0;
    std::int64_t delivered_total = 0;
    std::int64_t delivered_trailing = 0;
    GridAccumulator grid_full;
    GridAccumulator grid_trailing;
};

RunResult execute_run(const SimConfig& config, std::uint64_t run_seed) {
    RunState state(config, run_seed);
    for (int f = 0; f < config.frames; ++f) state.run_frame();

    RunResult result;
    result.frame_mean_aoi = state.tracker().frame_mean_aoi();
    const int window = trailing_window_frames(config.frames);
    result.trailing_aoi =
        state.tracker().average_aoi(config.frames - window + 1, config.frames);
    result.delivered_total = state.delivered_total();
    result.delivered_trailing = state.delivered_trailing();
    result.grid_full = state.grid_full();
    result.grid_trailing = state.grid_trailing();
    return result;
}

}  // namespace

MetricsReport run_simulation(const SimConfig& config, unsigned threads) {
    config.validate();

    const int runs = config.runs;
    std::vector<RunResult> results(static_cast<std::size_t>(runs));

    unsigned worker_count = threads == 0 ? std::thread::hardware_concurrency() : threads;
    worker_count = std::max(1u, std::min<unsigned>(worker_count, static_cast<unsigned>(runs)));

    if (worker_count == 1) {
        for (int r = 0; r < runs; ++r) {
            results[static_cast<std::size_t>(r)] =
                execute_run(config, derive_run_seed(config.master_seed,
                                                    static_cast<std::uint64_t>(r)));
        }
    } else {
        std::atomic<int> next_run{0};
        auto worker = [&] {
            for (;;) {
                const int r = next_run.fetch_add(1);
                if (r >= runs) return;
                results[static_cast<std::size_t>(r)] =
                    execute_run(config, derive_run_seed(config.master_seed,
                                                        static_cast<std::uint64_t>(r)));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Reduce in run order: the report is a pure function of (config, seed),
    // independent of the thread count.
    MetricsReport report;
    report.device_count = config.device_count;
    report.slots_per_frame = config.slots_per_frame;
    report.level_count = config.level_count;
    report.frames = config.frames;
    report.runs = runs;
    report.trailing_window = trailing_window_frames(config.frames);

    report.avg_aoi_per_frame.assign(static_cast<std::size_t>(config.frames), 0.0);
    report.per_run_trailing_aoi.reserve(static_cast<std::size_t>(runs));
    std::int64_t delivered_total = 0;
    std::int64_t delivered_trailing = 0;
    GridAccumulator grid_full(config.level_count, config.slots_per_frame);
    GridAccumulator grid_trailing(config.level_count, config.slots_per_frame);

    for (const auto& result : results) {
        for (std::size_t f = 0; f < result.frame_mean_aoi.size(); ++f) {
            report.avg_aoi_per_frame[f] += result.frame_mean_aoi[f];
        }
        report.per_run_trailing_aoi.push_back(result.trailing_aoi);
        delivered_total += result.delivered_total;
        delivered_trailing += result.delivered_trailing;
        grid_full.merge(result.grid_full);
        grid_trailing.merge(result.grid_trailing);
    }
    for (auto& value : report.avg_aoi_per_frame) value /= static_cast<double>(runs);

    double overall = 0.0;
    for (double value : report.avg_aoi_per_frame) overall += value;
    report.overall_avg_aoi = overall / static_cast<double>(config.frames);

    double trailing = 0.0;
    for (int f = config.frames - report.trailing_window; f < config.frames; ++f) {
        trailing += report.avg_aoi_per_frame[static_cast<std::size_t>(f)];
    }
    report.trailing_avg_aoi = trailing / static_cast<double>(report.trailing_window);

    report.throughput = normalized_throughput(
        delivered_total, config.device_count,
        static_cast<std::int64_t>(config.frames) * static_cast<std::int64_t>(runs));
    report.trailing_throughput = normalized_throughput(
        delivered_trailing, config.device_count,
        static_cast<std::int64_t>(report.trailing_window) * static_cast<std::int64_t>(runs));

    report.grid = grid_full.stats();
    report.trailing_grid = grid_trailing.stats();
    return report;
}

std::vector<MetricsReport> sweep_devices(const SimConfig& base,
                                         const std::vector<int>& device_counts,
                                         unsigned threads) {
    if (device_counts.empty()) {
        throw ConfigError("M", "sweep_devices: empty device count list");
    }
    // Validate every point before running any.
    for (int devices : device_counts) {
        SimConfig point = base;
        point.device_count = devices;
        point.validate();
    }
    std::vector<MetricsReport> reports;
    reports.reserve(device_counts.size());
    for (int devices : device_counts) {
        SimConfig point = base;
        point.device_count = devices;
        reports.push_back(run_simulation(point, threads));
    }
    return reports;
}

}  // namespace aoisim
