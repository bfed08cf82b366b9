// Python bindings for the aoisim core: domain types, the analytic formulas
// and the simulation entry points.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aoisim/agents.hpp"
#include "aoisim/channel.hpp"
#include "aoisim/core.hpp"
#include "aoisim/metrics.hpp"
#include "aoisim/rng.hpp"
#include "aoisim/sim.hpp"

namespace py = pybind11;
using namespace aoisim;

PYBIND11_MODULE(_aoisim, m) {
    m.doc() = "Frame-synchronous Monte-Carlo simulator of grant-free NOMA random access "
              "with Q-learning agents and age-of-information instrumentation";

    py::enum_<Scheme>(m, "Scheme")
        .value("AOI_QL_NOMA", Scheme::AoiQlNoma)
        .value("QL_NOMA_FIXED", Scheme::QlNomaFixed)
        .value("SA_NOMA", Scheme::SaNoma)
        .value("SA_NOMA_REPET", Scheme::SaNomaRepet);

    py::enum_<ExplorationKind>(m, "ExplorationKind")
        .value("GREEDY_RANDOM_TIE", ExplorationKind::GreedyRandomTie)
        .value("EPSILON_GREEDY", ExplorationKind::EpsilonGreedy);

    py::class_<ExplorationPolicy>(m, "ExplorationPolicy")
        .def(py::init<>())
        .def_readwrite("kind", &ExplorationPolicy::kind)
        .def_readwrite("epsilon0", &ExplorationPolicy::epsilon0)
        .def_readwrite("decay", &ExplorationPolicy::decay);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("M", &SimConfig::device_count)
        .def_readwrite("N", &SimConfig::slots_per_frame)
        .def_readwrite("K", &SimConfig::level_count)
        .def_readwrite("R", &SimConfig::rate)
        .def_readwrite("F", &SimConfig::frames)
        .def_readwrite("runs", &SimConfig::runs)
        .def_readwrite("alpha", &SimConfig::alpha)
        .def_readwrite("gamma", &SimConfig::gamma)
        .def_readwrite("scheme", &SimConfig::scheme)
        .def_readwrite("master_seed", &SimConfig::master_seed)
        .def_readwrite("exploration", &SimConfig::exploration)
        .def("validate", &SimConfig::validate);

    py::class_<GridAction>(m, "GridAction")
        .def(py::init<>())
        .def(py::init([](int level, int slot) { return GridAction{level, slot}; }),
             py::arg("level"), py::arg("slot"))
        .def_readwrite("level", &GridAction::level)
        .def_readwrite("slot", &GridAction::slot)
        .def("__eq__", [](const GridAction& a, const GridAction& b) { return a == b; })
        .def("__repr__", [](const GridAction& a) {
            return "GridAction(level=" + std::to_string(a.level) +
                   ", slot=" + std::to_string(a.slot) + ")";
        });

    py::class_<SlotOutcome>(m, "SlotOutcome")
        .def_readonly("slot", &SlotOutcome::slot)
        .def_readonly("sic_success", &SlotOutcome::sic_success)
        .def_readonly("delivered", &SlotOutcome::delivered)
        .def_readonly("colliding_levels", &SlotOutcome::colliding_levels);

    py::class_<QTable>(m, "QTable")
        .def(py::init<int, int>(), py::arg("level_count"), py::arg("slot_count"))
        .def_property_readonly("level_count", &QTable::level_count)
        .def_property_readonly("slot_count", &QTable::slot_count)
        .def("at", &QTable::at)
        .def("set", &QTable::set)
        .def("max_value", &QTable::max_value)
        .def("argmax_set", &QTable::argmax_set)
        .def("values", &QTable::values);

    py::class_<GridStats>(m, "GridStats")
        .def_readonly("level_count", &GridStats::level_count)
        .def_readonly("slot_count", &GridStats::slot_count)
        .def_readonly("usage", &GridStats::usage)
        .def_readonly("collision_percent", &GridStats::collision_percent)
        .def("usage_at", &GridStats::usage_at)
        .def("collision_at", &GridStats::collision_at);

    py::class_<MetricsReport>(m, "MetricsReport")
        .def_readonly("M", &MetricsReport::device_count)
        .def_readonly("N", &MetricsReport::slots_per_frame)
        .def_readonly("K", &MetricsReport::level_count)
        .def_readonly("F", &MetricsReport::frames)
        .def_readonly("runs", &MetricsReport::runs)
        .def_readonly("trailing_window", &MetricsReport::trailing_window)
        .def_readonly("avg_aoi_per_frame", &MetricsReport::avg_aoi_per_frame)
        .def_readonly("overall_avg_aoi", &MetricsReport::overall_avg_aoi)
        .def_readonly("trailing_avg_aoi", &MetricsReport::trailing_avg_aoi)
        .def_readonly("per_run_trailing_aoi", &MetricsReport::per_run_trailing_aoi)
        .def_readonly("throughput", &MetricsReport::throughput)
        .def_readonly("trailing_throughput", &MetricsReport::trailing_throughput)
        .def_readonly("grid", &MetricsReport::grid)
        .def_readonly("trailing_grid", &MetricsReport::trailing_grid);

    m.def(
        "compute_power_levels",
        [](int level_count, double rate) {
            return compute_power_levels(level_count, rate).levels;
        },
        py::arg("K"), py::arg("R"),
        "Received-power targets P_1 > ... > P_K satisfying the SIC design equations");
    m.def("min_slots_required", &min_slots_required, py::arg("M"), py::arg("K"));
    m.def(
        "decode_slot",
        [](int slot, const std::vector<std::pair<int, int>>& entries) {
            return decode_slot(SlotTransmissions{slot, entries});
        },
        py::arg("slot"), py::arg("entries"),
        "SIC outcome of one slot given (device, level) transmissions");
    m.def(
        "feedback_bits",
        [](const std::vector<SlotOutcome>& outcomes, int device_count, int level_count,
           bool aoi_aware) {
            const auto bits = feedback_bits(outcomes, device_count, level_count,
                                            aoi_aware ? RewardKind::AoiAware : RewardKind::Fixed);
            return std::vector<int>(bits.begin(), bits.end());
        },
        py::arg("outcomes"), py::arg("M"), py::arg("K"), py::arg("aoi_aware") = true);
    m.def("reward_from_bit", &reward_from_bit, py::arg("bit"));
    m.def("q_update", &q_update, py::arg("table"), py::arg("action"), py::arg("reward"),
          py::arg("alpha"), py::arg("gamma"));
    m.def("lemma1_avg_aoi", &lemma1_avg_aoi, py::arg("N"), py::arg("n"),
          "Average AoI of a device recurrently served in slot n: (N-1)/2 + n");
    m.def("theorem1_bound", &theorem1_bound, py::arg("N"), py::arg("M"), py::arg("K"),
          "Average AoI lower bound (N + ceil(M/K))/2");
    m.def("derive_run_seed", &derive_run_seed, py::arg("master_seed"), py::arg("run_index"));
    m.def("run_simulation", &run_simulation, py::arg("config"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep_devices", &sweep_devices, py::arg("config"), py::arg("device_counts"),
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
}
