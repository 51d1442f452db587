// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nomopt/adaptive.hpp"
#include "nomopt/clustering.hpp"
#include "nomopt/experiments.hpp"
#include "nomopt/model.hpp"
#include "nomopt/oracle.hpp"
#include "nomopt/rng.hpp"
#include "nomopt/scenario.hpp"
#include "nomopt/solver_noma.hpp"
#include "nomopt/solver_oma.hpp"

namespace py = pybind11;
using namespace nomopt;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Uplink two-user NOMA/OMA power allocation, adaptive MA selection "
              "and user clustering";

    py::enum_<UserClass>(m, "UserClass")
        .value("IoT", UserClass::IoT)
        .value("eMBB", UserClass::EMBB);
    py::enum_<MaScheme>(m, "MaScheme")
        .value("NOMA", MaScheme::NOMA)
        .value("OMA", MaScheme::OMA);
    py::enum_<SubproblemKind>(m, "SubproblemKind")
        .value("SS", SubproblemKind::SS)
        .value("ES", SubproblemKind::ES)
        .value("SE", SubproblemKind::SE)
        .value("EE", SubproblemKind::EE);
    py::enum_<PairPolicy>(m, "PairPolicy")
        .value("Adaptive", PairPolicy::Adaptive)
        .value("ForceNOMA", PairPolicy::ForceNOMA)
        .value("ForceOMA", PairPolicy::ForceOMA);
    py::enum_<Strategy>(m, "Strategy")
        .value("ProposedAdaptive", Strategy::ProposedAdaptive)
        .value("ProposedNOMA", Strategy::ProposedNOMA)
        .value("ProposedOMA", Strategy::ProposedOMA)
        .value("RandomNOMA", Strategy::RandomNOMA)
        .value("RandomOMA", Strategy::RandomOMA);

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def_readwrite("phi", &SystemParams::phi)
        .def_readwrite("circuit_power_mw", &SystemParams::circuit_power_mw)
        .def_readwrite("k_s", &SystemParams::k_s)
        .def_readwrite("k_e", &SystemParams::k_e)
        .def_readwrite("bandwidth_hz", &SystemParams::bandwidth_hz)
        .def("validate", &SystemParams::validate);

    py::class_<ClusterSpec>(m, "ClusterSpec")
        .def(py::init<>())
        .def_readwrite("gamma1", &ClusterSpec::gamma1)
        .def_readwrite("gamma2", &ClusterSpec::gamma2)
        .def_readwrite("class1", &ClusterSpec::class1)
        .def_readwrite("class2", &ClusterSpec::class2)
        .def_readwrite("w1", &ClusterSpec::w1)
        .def_readwrite("p1_max_mw", &ClusterSpec::p1_max_mw)
        .def_readwrite("p2_max_mw", &ClusterSpec::p2_max_mw)
        .def("kind", &ClusterSpec::kind)
        .def("w2", &ClusterSpec::w2)
        .def("budget1", &ClusterSpec::budget1)
        .def("budget2", &ClusterSpec::budget2)
        .def("validate", &ClusterSpec::validate);

    py::class_<PowerAllocation>(m, "PowerAllocation")
        .def(py::init<>())
        .def_readwrite("p1_mw", &PowerAllocation::p1_mw)
        .def_readwrite("p2_mw", &PowerAllocation::p2_mw)
        .def_readwrite("scheme", &PowerAllocation::scheme);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("tol_objective", &SolverConfig::tol_objective)
        .def_readwrite("max_outer_iters", &SolverConfig::max_outer_iters)
        .def_readwrite("max_inner_iters", &SolverConfig::max_inner_iters)
        .def_readwrite("tol_x_mw", &SolverConfig::tol_x_mw)
        .def_readwrite("multistart_fractions", &SolverConfig::multistart_fractions);

    py::class_<FpTrace>(m, "FpTrace")
        .def_readonly("objectives", &FpTrace::objectives)
        .def_readonly("aux_values", &FpTrace::aux_values)
        .def_readonly("converged", &FpTrace::converged);

    py::class_<DinkelbachTrace>(m, "DinkelbachTrace")
        .def_readonly("lambdas", &DinkelbachTrace::lambdas)
        .def_readonly("residuals", &DinkelbachTrace::residuals)
        .def_readonly("converged", &DinkelbachTrace::converged);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("alloc", &SolveResult::alloc)
        .def_readonly("objective", &SolveResult::objective)
        .def_readonly("trace", &SolveResult::trace)
        .def_readonly("dinkelbach_traces", &SolveResult::dinkelbach_traces);

    py::class_<DinkelbachResult>(m, "DinkelbachResult")
        .def_readonly("p_mw", &DinkelbachResult::p_mw)
        .def_readonly("ee", &DinkelbachResult::ee)
        .def_readonly("trace", &DinkelbachResult::trace);

    py::class_<ClusterDecision>(m, "ClusterDecision")
        .def_readonly("spec", &ClusterDecision::spec)
        .def_readonly("chosen", &ClusterDecision::chosen)
        .def_readonly("noma_result", &ClusterDecision::noma_result)
        .def_readonly("oma_result", &ClusterDecision::oma_result)
        .def_readonly("objective", &ClusterDecision::objective);

    py::class_<W1MinResult>(m, "W1MinResult")
        .def_readonly("w1_min", &W1MinResult::w1_min)
        .def_readonly("single_threshold", &W1MinResult::single_threshold)
        .def_readonly("diagnostic", &W1MinResult::diagnostic);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def(py::init([](int n1, int n2) { return GridSpec{n1, n2}; }),
             py::arg("n1"), py::arg("n2"))
        .def_readwrite("n1", &GridSpec::n1)
        .def_readwrite("n2", &GridSpec::n2);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("p1_mw", &OracleResult::p1_mw)
        .def_readonly("p2_mw", &OracleResult::p2_mw)
        .def_readonly("objective", &OracleResult::objective)
        .def_readonly("cell_gap_bound", &OracleResult::cell_gap_bound);

    py::class_<BestMaResult>(m, "BestMaResult")
        .def_readonly("scheme", &BestMaResult::scheme)
        .def_readonly("objective", &BestMaResult::objective)
        .def_readonly("noma", &BestMaResult::noma)
        .def_readonly("oma", &BestMaResult::oma);

    py::class_<UserRecord>(m, "UserRecord")
        .def(py::init<>())
        .def(py::init([](int id, UserClass cls, double gain) {
                 return UserRecord{id, cls, gain};
             }),
             py::arg("id"), py::arg("cls"), py::arg("gain"))
        .def_readwrite("id", &UserRecord::id)
        .def_readwrite("cls", &UserRecord::cls)
        .def_readwrite("gain", &UserRecord::gain);

    py::class_<PairAssignment>(m, "PairAssignment")
        .def_readonly("weak", &PairAssignment::weak)
        .def_readonly("strong", &PairAssignment::strong)
        .def_readonly("kind", &PairAssignment::kind)
        .def_readonly("policy", &PairAssignment::policy);

    py::class_<ClusterPlan>(m, "ClusterPlan")
        .def_readonly("pairs", &ClusterPlan::pairs)
        .def_readonly("solos", &ClusterPlan::solos);

    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init<>())
        .def_readwrite("g0_db", &ChannelParams::g0_db)
        .def_readwrite("n_exp", &ChannelParams::n_exp)
        .def_readwrite("n0_dbm_hz", &ChannelParams::n0_dbm_hz)
        .def_readwrite("nf_db", &ChannelParams::nf_db)
        .def_readwrite("bandwidth_hz", &ChannelParams::bandwidth_hz);

    py::class_<CellGeometry>(m, "CellGeometry")
        .def(py::init<>())
        .def_readwrite("r_inner_m", &CellGeometry::r_inner_m)
        .def_readwrite("r_outer_m", &CellGeometry::r_outer_m);

    py::class_<ScenarioUser>(m, "ScenarioUser")
        .def_readwrite("id", &ScenarioUser::id)
        .def_readwrite("cls", &ScenarioUser::cls)
        .def_readwrite("distance_m", &ScenarioUser::distance_m)
        .def_readwrite("gain", &ScenarioUser::gain);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("users", &Scenario::users)
        .def("records", py::overload_cast<>(&Scenario::records, py::const_));

    py::class_<SweepContext>(m, "SweepContext")
        .def(py::init<>())
        .def_readwrite("sys", &SweepContext::sys)
        .def_readwrite("chan", &SweepContext::chan)
        .def_readwrite("geom", &SweepContext::geom)
        .def_readwrite("solver", &SweepContext::solver)
        .def_readwrite("p_max_mw", &SweepContext::p_max_mw)
        .def_readwrite("drops", &SweepContext::drops)
        .def_readwrite("base_seed", &SweepContext::base_seed);

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("sweep_var", &SweepRecord::sweep_var)
        .def_readonly("value", &SweepRecord::value)
        .def_readonly("strategy", &SweepRecord::strategy)
        .def_readonly("mean_objective", &SweepRecord::mean_objective)
        .def_readonly("drops", &SweepRecord::drops)
        .def_readonly("seed", &SweepRecord::seed)
        .def_readonly("per_drop", &SweepRecord::per_drop);

    // Metrics and objective.
    m.def("se_oma", &se_oma, py::arg("gamma"), py::arg("p_mw"));
    m.def("se_noma_weak", &se_noma_weak, py::arg("gamma1"), py::arg("p1_mw"));
    m.def("se_noma_strong", &se_noma_strong, py::arg("gamma1"), py::arg("p1_mw"),
          py::arg("gamma2"), py::arg("p2_mw"));
    m.def("ee_oma", &ee_oma, py::arg("gamma"), py::arg("p_mw"), py::arg("params"));
    m.def("ee_noma_weak", &ee_noma_weak, py::arg("gamma1"), py::arg("p1_mw"),
          py::arg("params"));
    m.def("ee_noma_strong", &ee_noma_strong, py::arg("gamma1"), py::arg("p1_mw"),
          py::arg("gamma2"), py::arg("p2_mw"), py::arg("params"));
    m.def("ee_noma", &ee_noma, py::arg("user_index"), py::arg("gamma1"),
          py::arg("p1_mw"), py::arg("gamma2"), py::arg("p2_mw"), py::arg("params"));
    m.def("weighted_objective", &weighted_objective, py::arg("spec"),
          py::arg("alloc"), py::arg("params"));
    m.def("weighted_terms", &weighted_terms, py::arg("spec"), py::arg("alloc"),
          py::arg("params"));

    // Solvers.
    m.def("solve_noma", &solve_noma, py::arg("spec"), py::arg("params"),
          py::arg("config") = SolverConfig{});
    m.def("solve_noma_ss", &solve_noma_ss, py::arg("spec"), py::arg("params"),
          py::arg("config") = SolverConfig{});
    m.def("solve_noma_es", &solve_noma_es, py::arg("spec"), py::arg("params"),
          py::arg("config") = SolverConfig{});
    m.def("solve_noma_se", &solve_noma_se, py::arg("spec"), py::arg("params"),
          py::arg("config") = SolverConfig{});
    m.def("solve_oma", &solve_oma, py::arg("spec"), py::arg("params"),
          py::arg("config") = SolverConfig{});
    m.def("dinkelbach_ee", &dinkelbach_ee, py::arg("gamma"), py::arg("p_max_mw"),
          py::arg("params"), py::arg("config") = SolverConfig{});
    m.def("decide_cluster", &decide_cluster, py::arg("spec"), py::arg("params"),
          py::arg("config") = SolverConfig{});
    m.def("find_w1_min", &find_w1_min, py::arg("spec_template"), py::arg("params"),
          py::arg("config"), py::arg("w1_grid"));

    // Oracle.
    m.def("oracle_solve", &oracle_solve, py::arg("spec"), py::arg("scheme"),
          py::arg("params"), py::arg("grid") = GridSpec{});
    m.def("oracle_best_ma", &oracle_best_ma, py::arg("spec"), py::arg("params"),
          py::arg("grid") = GridSpec{});

    // Clustering.
    m.def("compute_l_star", &compute_l_star, py::arg("iot_gains_desc"),
          py::arg("embb_gains_desc"));
    m.def("build_proposed_plan", &build_proposed_plan, py::arg("iot"),
          py::arg("embb"));
    m.def("build_random_plan", &build_random_plan, py::arg("users"),
          py::arg("rng_seed"));
    m.def("build_strongest_weakest_plan", &build_strongest_weakest_plan,
          py::arg("users"));
    m.def("kind_of_pair", &kind_of_pair, py::arg("weak"), py::arg("strong"));

    // Scenario.
    m.def("gain_from_distance", &gain_from_distance, py::arg("distance_m"),
          py::arg("channel") = ChannelParams{});
    m.def("deterministic_scenario", &deterministic_scenario);
    m.def("random_scenario", &random_scenario, py::arg("n_iot"), py::arg("n_embb"),
          py::arg("geom") = CellGeometry{}, py::arg("channel") = ChannelParams{},
          py::arg("rng_seed") = 1);
    m.def("scenario_to_json", &scenario_to_json, py::arg("scenario"));
    m.def("scenario_from_json", &scenario_from_json, py::arg("text"));

    // Experiments.
    m.def("evaluate_strategy", &evaluate_strategy, py::arg("scenario"),
          py::arg("strategy"), py::arg("w1"), py::arg("params"),
          py::arg("p_max_mw") = 10.0, py::arg("config") = SolverConfig{},
          py::arg("plan_seed") = 1);
    m.def("sweep_group_size", &sweep_group_size, py::arg("group_sizes"),
          py::arg("w1"), py::arg("ctx"));
    m.def("sweep_embb_count", &sweep_embb_count, py::arg("embb_counts"),
          py::arg("n_iot"), py::arg("w1"), py::arg("ctx"));
    m.def("sweep_circuit_power", &sweep_circuit_power, py::arg("q_values_mw"),
          py::arg("n_iot"), py::arg("n_embb"), py::arg("w1"), py::arg("ctx"));
    m.def("sweep_weight", &sweep_weight, py::arg("w1_values"), py::arg("n_iot"),
          py::arg("n_embb"), py::arg("ctx"));
    m.def("run_figure_sweep", &run_figure_sweep, py::arg("figure"), py::arg("ctx"));
    m.def("sweep_csv_string", &sweep_csv_string, py::arg("records"));
    m.def("sweep_records_to_json", &sweep_records_to_json, py::arg("records"));
}
