// energies.hpp - the Ginzburg-Landau energy family: f_eps on general graphs
// and its sharp-interface limit f_0, the grid energies h_{N,eps} / k_{N,eps}
// with their eps = N^-alpha scalings, and continuum reference evaluators.
#pragma once

#include <limits>

#include "ggl/graph.hpp"
#include "ggl/grid.hpp"
#include "ggl/potential.hpp"

namespace ggl {

// Returned by the domain-restricted functionals outside their domain, so that
// energies compare uniformly.
inline constexpr double kEnergyInfinity = std::numeric_limits<double>::infinity();

struct FunctionalParams {
    double eps = 1.0;
    double chi = 0.5;
    double alpha = 1.0;
};

// f_eps(u) = chi sum_{ij} w_ij (u_i - u_j)^2 + eps^-1 sum_i W(u_i)
double f_eps(const WeightedGraph& g, const VertexFunction& u, double eps, double chi,
             const DoubleWell& well);

// chi sum_{ij} w_ij |u_i - u_j| = 2 chi TVa_1(u) on binary u, +inf otherwise
double f_zero(const WeightedGraph& g, const VertexFunction& u, double chi);

// h_{N,eps}(u) = N^-1 sum (forward diffs)^2 + eps^-1 sum W(u)
double h_energy(const GridFunction& u, double eps, const DoubleWell& well);

// Grid anisotropic TV on binary u: N^-1 sum |forward diffs|; +inf otherwise.
double h_zero(const GridFunction& u);

// h with eps = N^-alpha
double h_alpha(const GridFunction& u, double alpha, const DoubleWell& well);

// k_{N,eps}(u) = eps sum (forward diffs)^2 + eps^-1 N^-2 sum W(u)
double k_energy(const GridFunction& u, double eps, const DoubleWell& well);

// k with eps = N^-alpha
double k_alpha(const GridFunction& u, double alpha, const DoubleWell& well);

// Smooth field together with its partial derivatives.
struct SmoothField {
    ScalarField f;
    ScalarField fx;
    ScalarField fy;
};

// Continuum Ginzburg-Landau energy eps*int |grad f|^2 + eps^-1 int W(f) by the
// periodic rectangle rule on a quad_n x quad_n grid (spectrally accurate for
// smooth periodic fields). quad_n must be at least 16.
double continuum_gl_energy(const SmoothField& field, double eps, const DoubleWell& well,
                           int quad_n);

// sigma(W) times the axis-aligned perimeter of the phase boundary; for
// grid-aligned binary sets this equals sigma(W) * h_zero(u). Throws on
// non-binary input.
double k_inf_zero(const GridFunction& u, const DoubleWell& well);

}  // namespace ggl
