// flow.hpp - explicit-Euler gradient flows: the discretized Allen-Cahn flow of
// k_{N,eps} on the periodic grid (with fidelity term or mass constraint via a
// Lagrange multiplier) and the analogous flow of f_eps on general graphs.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ggl/energies.hpp"

namespace ggl {

// Thrown when a flow state stops being finite (blow-up); carries the step.
struct NumericalAbort : std::runtime_error {
    NumericalAbort(const std::string& what, int step_) : std::runtime_error(what), step(step_) {}
    int step;
};

enum class ConstraintMode { None, Fidelity, Mass };

struct FlowConfig {
    double eps = 1.0;
    double lambda = 0.0;  // fidelity strength, used only in Fidelity mode
    double dt = 0.01;
    double r = 0.0;       // vertex inner-product exponent; prefactor 4^-r on the grid
    int steps = 100;
    ConstraintMode constraint = ConstraintMode::None;
    std::uint64_t seed = 0;
    int snapshot_every = 0;  // 0 disables snapshots
    double chi = 0.5;        // graph flows only
};

ConstraintMode constraint_from_string(const std::string& s);
const char* to_string(ConstraintMode m);

struct TraceRow {
    int step;
    double time;
    double energy;
    double mass;
    double max_update;  // max |u_next - u| of the step that produced this state
};

struct FlowTrace {
    std::vector<TraceRow> rows;
    std::vector<double> final_values;  // grid (row-major) or vertex values
    int side = 0;                      // grid side, 0 for graph flows
};

// du/dt for the fidelity flow of k_{N,eps,lambda}:
//   -4^-r [ 2 eps sum_{nbr} (u - u_nbr) + eps^-1 N^-2 W'(u) + 2 lambda (u - f) ]
GridFunction grad_k_fidelity(const GridFunction& u, const GridFunction& f,
                             const FlowConfig& cfg, const DoubleWell& well);

// Lagrange multiplier for the mass-constrained flow:
// kappa = eps^-1 N^-4 sum W'(u). It enters the rate with a minus sign, which
// is the sign that makes the total mass time derivative vanish identically.
double lagrange_kappa(const GridFunction& u, double eps, const DoubleWell& well);

// du/dt for the chosen constraint mode (f ignored except in Fidelity mode).
GridFunction grid_flow_rate(const GridFunction& u, const GridFunction* f,
                            const FlowConfig& cfg, const DoubleWell& well);

// Vertex-space gradient flow rate of f_eps + lambda |u-f|_2^2, component i:
//   -d_i^-r [ 4 chi sum_j w_ij (u_i - u_j) + eps^-1 W'(u_i) + 2 lambda (u_i - f_i) ]
// Isolated vertices use metric weight 1 in place of the degenerate d_i^-r.
VertexFunction grad_f_graph(const WeightedGraph& g, const VertexFunction& u,
                            const VertexFunction* f, double eps, double chi, double lambda,
                            double r, const DoubleWell& well);

// One forward Euler step u + dt * rate. Throws (with the step index) when a
// non-finite value appears.
GridFunction step_euler(const GridFunction& u, const GridFunction* f, const FlowConfig& cfg,
                        const DoubleWell& well, int step_index = 0);
VertexFunction step_euler(const WeightedGraph& g, const VertexFunction& u,
                          const VertexFunction* f, const FlowConfig& cfg,
                          const DoubleWell& well, int step_index = 0);

// Linearized step-size bound min(1/(16 eps 4^-r), eps N^2 / (4^-r max|W''|)),
// with |W''| probed on [-0.5, 1.5]. Advisory only; the flow warns when
// cfg.dt exceeds it.
double grid_stability_dt(const FlowConfig& cfg, int n, const DoubleWell& well);

using GridEnergyFn = std::function<double(const GridFunction&)>;
using SnapshotFn = std::function<void(int step, const GridFunction&)>;

// Runs the grid flow, recording (step, time, energy, mass, max update) per
// step; the energy recorded is the functional being flowed (k_{N,eps,lambda}
// in fidelity mode, k_{N,eps} otherwise) unless an override is supplied.
FlowTrace run_flow(const GridFunction& u0, const GridFunction* f, const FlowConfig& cfg,
                   const DoubleWell& well, const GridEnergyFn& energy = nullptr,
                   const SnapshotFn& snapshot = nullptr);

// Graph counterpart, flowing f_eps (+ fidelity term when configured).
FlowTrace run_flow_graph(const WeightedGraph& g, const VertexFunction& u0,
                         const VertexFunction* f, const FlowConfig& cfg,
                         const DoubleWell& well);

// Seeded i.i.d. uniform [0,1] initial data.
GridFunction random_grid(int n, std::uint64_t seed);
VertexFunction random_vertex_function(int m, std::uint64_t seed);

}  // namespace ggl
