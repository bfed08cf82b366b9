// Acceptance suite: end-to-end checks of the published operating points.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.
//
// argv[1] (optional): path to the simulate binary, used by the CSV
// determinism criterion. Set AOISIM_SLOW_TESTS=1 to add the full-scale
// SA-NOMA-REPET collision check (about a minute).

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "aoisim/config_io.hpp"
#include "aoisim/csv.hpp"
#include "aoisim/metrics.hpp"
#include "aoisim/sim.hpp"

using namespace aoisim;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& label, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << label
              << " -- " << detail << '\n';
    if (!pass) ++g_failures;
}

std::string fmt(double value) {
    std::ostringstream out;
    out.precision(6);
    out << value;
    return out.str();
}

// The suite's pinned seed. Every tolerance below is fixed by the published
// values; the seed only fixes the Monte-Carlo draw the suite evaluates.
constexpr std::uint64_t kSuiteSeed = 11;

SimConfig operating_point(Scheme scheme, int runs) {
    SimConfig config;
    config.device_count = 18;
    config.slots_per_frame = 8;
    config.level_count = 3;
    config.rate = 1.0;
    config.frames = 1000;
    config.runs = runs;
    config.alpha = 0.1;
    config.gamma = 0.5;
    config.scheme = scheme;
    config.master_seed = kSuiteSeed;
    return config;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string simulate_bin = argc > 1 ? argv[1] : "";

    // ----- criterion 1: Theorem 1 evaluation -------------------------------
    {
        const double bound = theorem1_bound(8, 18, 3);
        report(1, bound == 7.0, "theorem1_bound(8, 18, 3) = 7 exactly", fmt(bound));
    }

    // Shared 100-run reports at the published operating point.
    std::map<Scheme, MetricsReport> reports;
    for (Scheme scheme : {Scheme::AoiQlNoma, Scheme::QlNomaFixed, Scheme::SaNoma,
                          Scheme::SaNomaRepet}) {
        reports.emplace(scheme, run_simulation(operating_point(scheme, 100)));
    }
    const auto& aoi_ql = reports.at(Scheme::AoiQlNoma);
    const auto& fixed = reports.at(Scheme::QlNomaFixed);
    const auto& sa = reports.at(Scheme::SaNoma);
    const auto& repet = reports.at(Scheme::SaNomaRepet);

    // ----- criterion 2: Fig. 3 reproduction at desk scale -------------------
    {
        const double a = aoi_ql.trailing_avg_aoi;
        const double f = fixed.trailing_avg_aoi;
        const bool pass = a >= 7.0 && a <= 7.5 && f >= 7.8 && f <= 8.4;
        report(2, pass, "last-100-frame AoI: AoI-QL in [7.0,7.5], fixed in [7.8,8.4]",
               "aoi_ql=" + fmt(a) + " fixed=" + fmt(f));
    }

    // ----- criterion 3: throughput match ------------------------------------
    {
        const double a = aoi_ql.throughput;
        const double f = fixed.throughput;
        const double gap = f - a;
        const bool pass = std::abs(a - 0.974) <= 0.02 && std::abs(f - 0.991) <= 0.01 &&
                          gap <= 0.03;
        report(3, pass,
               "throughput: AoI-QL 0.974+/-0.02, fixed 0.991+/-0.01, gap <= 3pp",
               "aoi_ql=" + fmt(a) + " fixed=" + fmt(f) + " gap=" + fmt(100.0 * gap) + "pp");
    }

    // ----- criterion 4: Lemma 1 oracle --------------------------------------
    {
        bool pass = true;
        std::string detail;
        for (int slot_count : {4, 8, 16}) {
            for (int slot = 1; slot <= slot_count; ++slot) {
                AoiTracker tracker(1, slot_count);
                const int frames = 200;
                for (int f = 1; f <= frames; ++f) {
                    for (int n = 1; n <= slot_count; ++n) {
                        tracker.step(f, n,
                                     n == slot ? std::vector<int>{0} : std::vector<int>{});
                    }
                }
                // Steady state holds from frame 2 on.
                const double simulated = tracker.average_aoi(2, frames);
                const double expected = lemma1_avg_aoi(slot_count, slot);
                if (std::abs(simulated - expected) > 1e-6) {
                    pass = false;
                    detail = "N=" + std::to_string(slot_count) + " n=" + std::to_string(slot) +
                             " got " + fmt(simulated) + " want " + fmt(expected);
                }
            }
        }
        report(4, pass, "recurrent service at slot n gives AoI (N-1)/2 + n within 1e-6",
               pass ? "N in {4,8,16}, all slots" : detail);
    }

    // ----- criterion 5: Theorem 1 is a hard lower bound ----------------------
    {
        bool pass = true;
        std::string detail = "all trailing means >= bound";
        const auto check_reports = [&](const MetricsReport& r, const std::string& name) {
            const double bound =
                theorem1_bound(r.slots_per_frame, r.device_count, r.level_count);
            if (r.trailing_avg_aoi < bound - 1e-9) {
                pass = false;
                detail = name + " mean " + fmt(r.trailing_avg_aoi) + " < " + fmt(bound);
            }
            for (double per_run : r.per_run_trailing_aoi) {
                if (per_run < bound - 1e-9) {
                    pass = false;
                    detail = name + " run value " + fmt(per_run) + " < " + fmt(bound);
                }
            }
        };
        for (const auto& [scheme, r] : reports) check_reports(r, scheme_name(scheme));

        // A second configuration: one slot's worth of devices on a wide frame.
        SimConfig narrow = operating_point(Scheme::AoiQlNoma, 10);
        narrow.device_count = 3;
        narrow.slots_per_frame = 20;
        const auto narrow_report = run_simulation(narrow);
        check_reports(narrow_report, "AOI_QL_NOMA(M=3,N=20)");
        report(5, pass, "trailing AoI >= theorem1_bound for every scheme, config and run",
               detail);
    }

    // ----- criterion 6: Remark 1 saturation ----------------------------------
    {
        SimConfig saturated = operating_point(Scheme::AoiQlNoma, 10);
        saturated.slots_per_frame = 20;
        saturated.device_count = 60;  // M = K*N
        const auto aware = run_simulation(saturated);
        saturated.scheme = Scheme::QlNomaFixed;
        const auto plain = run_simulation(saturated);
        const double a = aware.trailing_avg_aoi;
        const double b = plain.trailing_avg_aoi;
        const double diff = std::abs(a - b) / std::max(a, b);
        report(6, diff < 0.03,
               "at M = K*N the AoI-aware and fixed rewards agree within 3%",
               "aoi_ql=" + fmt(a) + " fixed=" + fmt(b) + " diff=" + fmt(100.0 * diff) + "%");
    }

    // ----- criterion 7: grid concentration -----------------------------------
    {
        const int threshold = min_slots_required(18, 3);  // 6
        double within = 0.0;
        double total = 0.0;
        for (int k = 1; k <= 3; ++k) {
            for (int n = 1; n <= 8; ++n) {
                const double usage = aoi_ql.trailing_grid.usage_at(k, n);
                total += usage;
                if (n <= threshold) within += usage;
            }
        }
        const double fraction = within / total;
        bool uniform = true;
        std::string sa_detail;
        // SA-NOMA: every cell within 3 sigma of M/(K*N) devices per frame.
        const double expected = 18.0 / 24.0;
        const double per_frame_var = 18.0 * (1.0 / 24.0) * (23.0 / 24.0);
        const double samples = static_cast<double>(sa.runs) * sa.frames;
        const double sigma = std::sqrt(per_frame_var / samples);
        for (int k = 1; k <= 3; ++k) {
            for (int n = 1; n <= 8; ++n) {
                const double deviation = std::abs(sa.grid.usage_at(k, n) - expected);
                if (deviation > 3.0 * sigma) {
                    uniform = false;
                    sa_detail = " SA cell (" + std::to_string(k) + "," + std::to_string(n) +
                                ") off by " + fmt(deviation / sigma) + " sigma";
                }
            }
        }
        report(7, fraction >= 0.95 && uniform,
               "converged AoI-QL puts >= 95% of transmissions in slots <= 6; SA-NOMA uniform",
               "fraction=" + fmt(100.0 * fraction) + "%" + sa_detail);
    }

    // ----- criterion 8: collision ordering ------------------------------------
    {
        double repet_slot1 = 0.0;
        for (int k = 1; k <= 3; ++k) repet_slot1 += repet.grid.collision_at(k, 1);
        repet_slot1 /= 3.0;

        double worst_ql = 0.0;
        for (int k = 1; k <= 3; ++k) {
            for (int n = 1; n <= 8; ++n) {
                worst_ql = std::max(worst_ql, aoi_ql.trailing_grid.collision_at(k, n));
                worst_ql = std::max(worst_ql, fixed.trailing_grid.collision_at(k, n));
            }
        }
        const bool pass = repet_slot1 > 25.0 && worst_ql < 2.0;
        report(8, pass,
               "SA-REPET early-slot collisions > 25%; converged QL cells < 2%",
               "repet_slot1=" + fmt(repet_slot1) + "% worst_ql_cell=" + fmt(worst_ql) + "%");
    }

    // ----- criterion 9: CSV determinism ---------------------------------------
    {
        bool pass = true;
        std::string detail;
        if (simulate_bin.empty()) {
            pass = false;
            detail = "simulate binary path not provided";
        } else {
            const fs::path dir = fs::temp_directory_path() / "aoisim_acceptance_csv";
            fs::remove_all(dir);
            fs::create_directories(dir);
            const fs::path cfg_path = dir / "run.cfg";
            {
                std::ofstream cfg(cfg_path, std::ios::binary);
                cfg << "M=6\nN=4\nK=2\nF=80\nruns=5\nscheme=AOI_QL_NOMA\nmaster_seed=9\n";
            }
            for (const char* sub : {"a", "b"}) {
                const std::string cmd = simulate_bin + " --config " + cfg_path.string() +
                                        " --out " + (dir / sub).string() + " > /dev/null";
                if (std::system(cmd.c_str()) != 0) {
                    pass = false;
                    detail = "simulate invocation failed";
                }
            }
            if (pass) {
                for (const char* name : {"aoi_per_frame.csv", "grid_usage.csv",
                                         "collision_rate.csv", "sweep.csv", "summary.txt"}) {
                    if (read_file(dir / "a" / name) != read_file(dir / "b" / name)) {
                        pass = false;
                        detail = std::string(name) + " differs between invocations";
                    }
                }
                if (pass) detail = "two CLI invocations produced byte-identical outputs";
            }
            fs::remove_all(dir);
        }
        report(9, pass, "identical config and seed give byte-identical CSV outputs", detail);
    }

    // ----- optional slow check: SA-NOMA-REPET at full 10^3-run scale ----------
    if (const char* slow = std::getenv("AOISIM_SLOW_TESTS"); slow != nullptr && *slow == '1') {
        const auto full = run_simulation(operating_point(Scheme::SaNomaRepet, 1000));
        double slot1 = 0.0;
        for (int k = 1; k <= 3; ++k) slot1 += full.grid.collision_at(k, 1);
        slot1 /= 3.0;

        // Per-cell collision rates cap near 26% here (slot-1 cell occupancy is
        // Bin(18, 1/18)), so the >50% initial figure is measured at slot
        // level: the fraction of frames whose first slot fails SIC.
        SimConfig config = operating_point(Scheme::SaNomaRepet, 200);
        std::int64_t failed = 0;
        for (int r = 0; r < config.runs; ++r) {
            RunState state(config,
                           derive_run_seed(config.master_seed, static_cast<std::uint64_t>(r)));
            for (int f = 0; f < config.frames; ++f) {
                state.run_frame();
                if (!state.last_outcomes().front().sic_success) ++failed;
            }
        }
        const double slot_failure =
            100.0 * static_cast<double>(failed) /
            (static_cast<double>(config.runs) * static_cast<double>(config.frames));

        const bool pass = slot1 > 25.0 && slot_failure > 50.0;
        report(10, pass,
               "full scale: SA-REPET slot-1 cell collisions > 25%, slot-1 SIC failure > 50%",
               "mean_cell=" + fmt(slot1) + "% slot_failure=" + fmt(slot_failure) + "%");
    }

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed\n"
                                  : "acceptance: FAILURES present\n");
    return g_failures == 0 ? 0 : 1;
}
