// bindings.cpp - pybind11 module exposing the core operations.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ggl/flow.hpp"
#include "ggl/harness.hpp"
#include "ggl/io.hpp"
#include "ggl/nlm.hpp"

namespace py = pybind11;
using namespace ggl;

PYBIND11_MODULE(_ggl, m) {
    m.doc() = "graph Ginzburg-Landau energies, gradient flows, and limit experiments";

    // --- graph calculus ---
    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def(py::init<int>(), py::arg("m"))
        .def("size", &WeightedGraph::size)
        .def("degree", &WeightedGraph::degree, py::arg("i"))
        .def("weight", &WeightedGraph::weight, py::arg("i"), py::arg("j"))
        .def("add_edge", &WeightedGraph::add_edge, py::arg("i"), py::arg("j"), py::arg("w"))
        .def("edges", &WeightedGraph::edges);

    py::class_<EdgeFunction>(m, "EdgeFunction")
        .def(py::init<const WeightedGraph&, std::vector<double>>(), py::arg("graph"),
             py::arg("values"))
        .def_static("zero", &EdgeFunction::zero)
        .def_static("projected", &EdgeFunction::projected)
        .def("size", &EdgeFunction::size)
        .def("values", &EdgeFunction::values)
        .def("__call__", &EdgeFunction::operator(), py::arg("i"), py::arg("j"));

    py::class_<InnerProductParams>(m, "InnerProductParams")
        .def(py::init([](double r, double q) {
                 InnerProductParams p{r, q};
                 p.validate();
                 return p;
             }),
             py::arg("r"), py::arg("q"))
        .def_readonly("r", &InnerProductParams::r)
        .def_readonly("q", &InnerProductParams::q);
    m.def("v_inner", &v_inner, py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("r"));
    m.def("e_inner", &e_inner, py::arg("graph"), py::arg("phi"), py::arg("psi"), py::arg("q"));
    m.def("gradient", &gradient, py::arg("graph"), py::arg("u"), py::arg("q"));
    m.def("divergence", &divergence, py::arg("graph"), py::arg("phi"), py::arg("r"),
          py::arg("q"));
    m.def("laplacian", &laplacian, py::arg("graph"), py::arg("u"), py::arg("r"));
    m.def("laplacian_matrix", &laplacian_matrix, py::arg("graph"), py::arg("r"));
    m.def("dirichlet_energy", &dirichlet_energy, py::arg("graph"), py::arg("u"));
    m.def("tv_isotropic", &tv_isotropic, py::arg("graph"), py::arg("u"));
    m.def("tv_anisotropic", &tv_anisotropic, py::arg("graph"), py::arg("u"), py::arg("q"));
    m.def("graph_cut", &graph_cut, py::arg("graph"), py::arg("u"));
    m.def("tv_maximizer_field", &tv_maximizer_field, py::arg("graph"), py::arg("u"),
          py::arg("q"));
    m.def("tva_maximizer_field", &tva_maximizer_field, py::arg("graph"), py::arg("u"));

    // --- grid ---
    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init<int, double>(), py::arg("n"), py::arg("fill") = 0.0)
        .def(py::init<int, std::vector<double>>(), py::arg("n"), py::arg("values"))
        .def("side", &GridFunction::side)
        .def("value", &GridFunction::value, py::arg("i"), py::arg("j"))
        .def("set", &GridFunction::set, py::arg("i"), py::arg("j"), py::arg("x"))
        .def("values", [](const GridFunction& u) { return u.values(); });

    m.def("sample", &sample, py::arg("f"), py::arg("n"));
    m.def("lp_norm", &lp_norm, py::arg("u"), py::arg("p"));
    m.def("lp_distance", &lp_distance, py::arg("u"), py::arg("v"), py::arg("p"),
          py::arg("lcm_cap") = 10000);
    m.def("diff_quotient", &diff_quotient, py::arg("u"), py::arg("k"));
    m.def("bilinear_interpolate", &bilinear_interpolate, py::arg("u"), py::arg("x"),
          py::arg("y"));
    m.def("indicator_square", &indicator_square, py::arg("n"), py::arg("i0"), py::arg("j0"),
          py::arg("k"));
    m.def("indicator_band", &indicator_band, py::arg("n"), py::arg("i0"), py::arg("k"));
    m.def("checkerboard", &checkerboard, py::arg("n"));
    m.def("grid_mass", &grid_mass, py::arg("u"));

    // --- potential and energies ---
    py::class_<DoubleWell>(m, "DoubleWell")
        .def("w", [](const DoubleWell& w, double s) { return w.w(s); })
        .def("dw", [](const DoubleWell& w, double s) { return w.dw(s); });
    m.def("standard_well", &standard_well);
    m.def("sigma_w", &sigma_w, py::arg("well"), py::arg("abs_tol") = 1e-10);
    py::enum_<ScalingMode>(m, "ScalingMode").value("H", ScalingMode::H).value("K", ScalingMode::K);
    py::enum_<AlphaVerdict>(m, "AlphaVerdict")
        .value("InRegime", AlphaVerdict::InRegime)
        .value("Conjectural", AlphaVerdict::Conjectural)
        .value("OutOfRegime", AlphaVerdict::OutOfRegime);
    m.def("validate_alpha", &validate_alpha, py::arg("well"), py::arg("mode"), py::arg("alpha"));

    m.def("f_eps", &f_eps, py::arg("graph"), py::arg("u"), py::arg("eps"), py::arg("chi"),
          py::arg("well"));
    m.def("f_zero", &f_zero, py::arg("graph"), py::arg("u"), py::arg("chi"));
    m.def("h_energy", &h_energy, py::arg("u"), py::arg("eps"), py::arg("well"));
    m.def("h_zero", &h_zero, py::arg("u"));
    m.def("h_alpha", &h_alpha, py::arg("u"), py::arg("alpha"), py::arg("well"));
    m.def("k_energy", &k_energy, py::arg("u"), py::arg("eps"), py::arg("well"));
    m.def("k_alpha", &k_alpha, py::arg("u"), py::arg("alpha"), py::arg("well"));
    m.def("k_inf_zero", &k_inf_zero, py::arg("u"), py::arg("well"));
    m.def(
        "continuum_gl_energy",
        [](const ScalarField& f, const ScalarField& fx, const ScalarField& fy, double eps,
           const DoubleWell& well, int quad_n) {
            return continuum_gl_energy({f, fx, fy}, eps, well, quad_n);
        },
        py::arg("f"), py::arg("fx"), py::arg("fy"), py::arg("eps"), py::arg("well"),
        py::arg("quad_n"));

    // --- nonlocal means ---
    py::class_<PatchWeightSpec>(m, "PatchWeightSpec")
        .def(py::init<GridFunction, int, double>(), py::arg("phi"), py::arg("half_width"),
             py::arg("sigma"))
        .def_static("with_scale_c", &PatchWeightSpec::with_scale_c, py::arg("phi"),
                    py::arg("half_width"), py::arg("c"))
        .def_readonly("half_width", &PatchWeightSpec::half_width)
        .def_readonly("sigma", &PatchWeightSpec::sigma);
    m.def("patch_distance_sq", &patch_distance_sq, py::arg("spec"), py::arg("i"), py::arg("j"),
          py::arg("k"), py::arg("l"));
    m.def("nlm_weight", &nlm_weight, py::arg("spec"), py::arg("i"), py::arg("j"), py::arg("k"),
          py::arg("l"));
    m.def("g_energy", &g_energy, py::arg("u"), py::arg("spec"),
          py::arg("patch_budget_bytes") = std::size_t{1} << 30);
    m.def("limit_weight_L", &limit_weight_L, py::arg("phi"), py::arg("x1"), py::arg("y1"),
          py::arg("x2"), py::arg("y2"), py::arg("half_width"), py::arg("sigma"));
    m.def("limit_weight_L_nodes", &limit_weight_L_nodes, py::arg("phi"), py::arg("x1"),
          py::arg("y1"), py::arg("x2"), py::arg("y2"), py::arg("half_width"), py::arg("sigma"));
    py::class_<EllWeightResult>(m, "EllWeightResult")
        .def_readonly("value", &EllWeightResult::value)
        .def_readonly("quad_error", &EllWeightResult::quad_error);
    m.def("limit_weight_ell", &limit_weight_ell, py::arg("phi"), py::arg("x1"), py::arg("y1"),
          py::arg("x2"), py::arg("y2"), py::arg("ell"), py::arg("c"), py::arg("quad_m") = 64);
    m.def("g_inf", &g_inf, py::arg("u"), py::arg("w"), py::arg("quad_per_cell") = 2);
    m.def("weight_sup_error_fixed", &weight_sup_error_fixed, py::arg("phi"), py::arg("n"),
          py::arg("half_width"), py::arg("sigma"), py::arg("seed") = 0x9e3779b97f4a7c15ull);
    m.def("weight_sup_error_scaled", &weight_sup_error_scaled, py::arg("phi"), py::arg("n"),
          py::arg("ell"), py::arg("c"), py::arg("quad_m") = 64,
          py::arg("seed") = 0x9e3779b97f4a7c15ull);

    // --- flows ---
    py::enum_<ConstraintMode>(m, "ConstraintMode")
        .value("NoConstraint", ConstraintMode::None)
        .value("Fidelity", ConstraintMode::Fidelity)
        .value("Mass", ConstraintMode::Mass);
    py::class_<FlowConfig>(m, "FlowConfig")
        .def(py::init<>())
        .def_readwrite("eps", &FlowConfig::eps)
        .def_readwrite("lambda_", &FlowConfig::lambda)
        .def_readwrite("dt", &FlowConfig::dt)
        .def_readwrite("r", &FlowConfig::r)
        .def_readwrite("steps", &FlowConfig::steps)
        .def_readwrite("constraint", &FlowConfig::constraint)
        .def_readwrite("seed", &FlowConfig::seed)
        .def_readwrite("snapshot_every", &FlowConfig::snapshot_every)
        .def_readwrite("chi", &FlowConfig::chi);
    py::class_<TraceRow>(m, "TraceRow")
        .def_readonly("step", &TraceRow::step)
        .def_readonly("time", &TraceRow::time)
        .def_readonly("energy", &TraceRow::energy)
        .def_readonly("mass", &TraceRow::mass)
        .def_readonly("max_update", &TraceRow::max_update);
    py::class_<FlowTrace>(m, "FlowTrace")
        .def_readonly("rows", &FlowTrace::rows)
        .def_readonly("final_values", &FlowTrace::final_values)
        .def_readonly("side", &FlowTrace::side)
        .def("final_grid", [](const FlowTrace& t) {
            return GridFunction(t.side, t.final_values);
        });
    m.def("grad_k_fidelity", &grad_k_fidelity, py::arg("u"), py::arg("f"), py::arg("cfg"),
          py::arg("well"));
    m.def("lagrange_kappa", &lagrange_kappa, py::arg("u"), py::arg("eps"), py::arg("well"));
    m.def(
        "grad_f_graph",
        [](const WeightedGraph& g, const VertexFunction& u, std::optional<VertexFunction> f,
           double eps, double chi, double lambda, double r, const DoubleWell& well) {
            return grad_f_graph(g, u, f ? &*f : nullptr, eps, chi, lambda, r, well);
        },
        py::arg("graph"), py::arg("u"), py::arg("f"), py::arg("eps"), py::arg("chi"),
        py::arg("lambda_"), py::arg("r"), py::arg("well"));
    m.def(
        "run_flow",
        [](const GridFunction& u0, std::optional<GridFunction> f, const FlowConfig& cfg,
           const DoubleWell& well) { return run_flow(u0, f ? &*f : nullptr, cfg, well); },
        py::arg("u0"), py::arg("f"), py::arg("cfg"), py::arg("well"));
    m.def(
        "run_flow_graph",
        [](const WeightedGraph& g, const VertexFunction& u0, std::optional<VertexFunction> f,
           const FlowConfig& cfg, const DoubleWell& well) {
            return run_flow_graph(g, u0, f ? &*f : nullptr, cfg, well);
        },
        py::arg("graph"), py::arg("u0"), py::arg("f"), py::arg("cfg"), py::arg("well"));
    m.def("random_grid", &random_grid, py::arg("n"), py::arg("seed"));
    m.def("grid_stability_dt", &grid_stability_dt, py::arg("cfg"), py::arg("n"),
          py::arg("well"));

    // --- harness ---
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("n", &SweepRow::n)
        .def_readonly("param", &SweepRow::param)
        .def_readonly("measured", &SweepRow::measured)
        .def_readonly("reference", &SweepRow::reference)
        .def_readonly("ratio", &SweepRow::ratio);
    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("name", &SweepReport::name)
        .def_readonly("rows", &SweepReport::rows)
        .def_readonly("slope", &SweepReport::slope)
        .def_readonly("residual", &SweepReport::residual)
        .def("to_csv", &SweepReport::to_csv);
    py::enum_<ShapeWinner>(m, "ShapeWinner")
        .value("Square", ShapeWinner::Square)
        .value("Band", ShapeWinner::Band)
        .value("Tie", ShapeWinner::Tie);
    py::class_<ShapeCheckResult>(m, "ShapeCheckResult")
        .def_readonly("k", &ShapeCheckResult::k)
        .def_readonly("square_energy", &ShapeCheckResult::square_energy)
        .def_readonly("band_energy", &ShapeCheckResult::band_energy)
        .def_readonly("winner", &ShapeCheckResult::winner);
    py::class_<MinCutResult>(m, "MinCutResult")
        .def_readonly("labels", &MinCutResult::labels)
        .def_readonly("energy", &MinCutResult::energy)
        .def_readonly("cut", &MinCutResult::cut);
    py::class_<AnnealResult>(m, "AnnealResult")
        .def_readonly("labels", &AnnealResult::labels)
        .def_readonly("energy", &AnnealResult::energy)
        .def_readonly("oracle", &AnnealResult::oracle)
        .def_readonly("partition_match", &AnnealResult::partition_match)
        .def_readonly("energy_match", &AnnealResult::energy_match);
    m.def(
        "sweep_k_pointwise",
        [](const ScalarField& f, const ScalarField& fx, const ScalarField& fy, double eps,
           std::vector<int> ns, const DoubleWell& well, int quad_factor) {
            return sweep_k_pointwise({f, fx, fy}, eps, ns, well, quad_factor);
        },
        py::arg("f"), py::arg("fx"), py::arg("fy"), py::arg("eps"), py::arg("ns"),
        py::arg("well"), py::arg("quad_factor") = 4);
    m.def(
        "alpha_counterexample",
        [](std::vector<int> ns, double alpha, const DoubleWell& well) {
            return alpha_counterexample(ns, alpha, well);
        },
        py::arg("ns"), py::arg("alpha"), py::arg("well"));
    m.def("minimizer_shape_check", &minimizer_shape_check, py::arg("n"), py::arg("mass"));
    m.def(
        "recovery_profile_check",
        [](std::vector<double> eps_list, std::vector<int> ns, const DoubleWell& well) {
            return recovery_profile_check(eps_list, ns, well);
        },
        py::arg("eps_list"), py::arg("ns"), py::arg("well"));
    m.def("brute_force_min_cut", &brute_force_min_cut, py::arg("graph"), py::arg("mass"),
          py::arg("chi"));
    m.def(
        "anneal_f_eps",
        [](const WeightedGraph& g, std::vector<double> schedule, double mass, double chi,
           int steps, std::uint64_t seed) {
            return anneal_f_eps(g, schedule, mass, chi, steps, seed);
        },
        py::arg("graph"), py::arg("eps_schedule"), py::arg("mass"), py::arg("chi"),
        py::arg("steps_per_eps"), py::arg("seed") = 1);
    m.def(
        "noncompactness_demo",
        [](std::vector<int> ns) { return noncompactness_demo(ns); }, py::arg("ns"));
    m.def("barbell_graph", &barbell_graph, py::arg("bridge_weight") = 0.1);

    // --- io ---
    m.def("write_pgm",
          py::overload_cast<const std::string&, const GridFunction&, bool, int>(&write_pgm),
          py::arg("path"), py::arg("u"), py::arg("binary") = false, py::arg("maxval") = 255);
    m.def("read_pgm", py::overload_cast<const std::string&>(&read_pgm), py::arg("path"));
    m.def("write_grid_csv",
          py::overload_cast<const std::string&, const GridFunction&>(&write_grid_csv),
          py::arg("path"), py::arg("u"));
    m.def("read_grid_csv", py::overload_cast<const std::string&>(&read_grid_csv),
          py::arg("path"));
    m.def("write_graph", py::overload_cast<const std::string&, const WeightedGraph&>(&write_graph),
          py::arg("path"), py::arg("graph"));
    m.def("read_graph", py::overload_cast<const std::string&>(&read_graph), py::arg("path"));

    py::list names;
    for (auto item : m.attr("__dict__"))
        if (!py::str(item).attr("startswith")("_").cast<bool>()) names.append(item);
    m.attr("__all__") = names;
}
