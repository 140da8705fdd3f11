// harness.hpp - refinement sweeps, minimizer-shape checks, brute-force
// oracles, and the counterexample reproductions built on top of the energy
// evaluators. Every sweep is deterministic given its inputs and serializes to
// CSV byte-identically across re-runs.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggl/energies.hpp"
#include "ggl/flow.hpp"

namespace ggl {

struct SweepRow {
    double n;          // grid side or instance label
    double param;      // sweep-specific (eps, alpha, distance, ...)
    double measured;
    double reference;
    double ratio;
};

struct SweepReport {
    std::string name;
    std::string slope_desc;  // which column the slope was fitted on
    std::vector<SweepRow> rows;
    std::optional<double> slope;     // OLS log-log slope, set when rows >= 3
    std::optional<double> residual;  // RMS residual of that fit

    std::string to_csv() const;
};

// OLS fit of log(y) vs log(x); returns {slope, rms residual}.
std::pair<double, double> fit_loglog(std::span<const double> xs, std::span<const double> ys);

// |k_{N,eps}(sample f) - continuum energy| across the N list; the continuum
// reference uses quadrature at quad_factor*N nodes. Slope fitted on the error.
SweepReport sweep_k_pointwise(const SmoothField& field, double eps, std::span<const int> ns,
                              const DoubleWell& well, int quad_factor = 4);

// k_N^alpha of the half-band indicator equals 2 N^{1-alpha} exactly; rows
// carry both sides. Slope fitted on the measured energy (expected 1-alpha).
SweepReport alpha_counterexample(std::span<const int> ns, double alpha, const DoubleWell& well);

enum class ShapeWinner { Square, Band, Tie };

struct ShapeCheckResult {
    int k = 0;  // square side in cells
    double square_energy = 0.0;
    double band_energy = 0.0;
    ShapeWinner winner = ShapeWinner::Tie;
};

// Evaluates h_zero on the mass-M square (requires N^2 M to be a perfect
// square) and on a band, and decides the winner by the exact integer
// comparison 2K vs N (i.e. 4 sqrt(M) vs 2), no floating tolerance.
ShapeCheckResult minimizer_shape_check(int n, double mass);

// k_{N,eps} of a sampled logistic interface profile across the width-1/2
// vertical band, compared to 2*sigma(W). Requires N >= 10/eps so the diffuse
// interface is resolved. Rows: (N, eps, measured, 2 sigma, relative gap).
SweepReport recovery_profile_check(std::span<const double> eps_list, std::span<const int> ns,
                                   const DoubleWell& well);

struct MinCutResult {
    VertexFunction labels;
    double energy = 0.0;  // f_zero of the labels
    double cut = 0.0;     // plain cut weight
};

// Exhaustive minimizer of f_zero over binary labelings (optionally restricted
// to mean mass M with m*M integral). Ties break to the lexicographically
// smallest labeling. Requires m <= 20.
MinCutResult brute_force_min_cut(const WeightedGraph& g, std::optional<double> mass,
                                 double chi);

struct AnnealResult {
    VertexFunction labels;        // thresholded flow output
    double energy = 0.0;          // f_zero of labels
    MinCutResult oracle;
    bool partition_match = false; // same two-cluster partition as the oracle
    bool energy_match = false;    // f_zero(labels) equals oracle energy
};

// Mass-projected gradient-flow minimization of f_eps warm-started across a
// decreasing eps schedule, thresholded at 1/2 (ties to 0) and compared to the
// brute-force oracle.
AnnealResult anneal_f_eps(const WeightedGraph& g, std::span<const double> eps_schedule,
                          double mass, double chi, int steps_per_eps,
                          std::uint64_t seed = 1);

// Checkerboard rows (N, L1 distance to the 4N checkerboard, g_N with unit
// weights, 1/2, ratio): bounded energy with non-vanishing distances.
SweepReport noncompactness_demo(std::span<const int> ns);

// Two unit-weight triangles joined by a single bridge edge of the given
// weight; the engineered instance whose unique minimal cut is the bridge.
WeightedGraph barbell_graph(double bridge_weight = 0.1);

}  // namespace ggl
