// nlm.hpp - nonlocal-means patch weights on the fully connected grid graph,
// the energy g_N built from them, and the two continuum limit weights.
#pragma once

#include <cstdint>

#include "ggl/grid.hpp"

namespace ggl {

// Patch comparison setup: an image Phi on the N x N torus grid, a patch
// half-width L (pixels) and a Gaussian scale sigma.
struct PatchWeightSpec {
    GridFunction phi;
    int half_width = 0;    // L, with 2L+1 < N
    double sigma = 1.0;

    PatchWeightSpec(GridFunction phi_, int half_width_, double sigma_);
    // sigma = N / c, the scaling used for the ell-type limit.
    static PatchWeightSpec with_scale_c(GridFunction phi_, int half_width_, double c);
    int side() const { return phi.side(); }
};

// d^2 = sum_{r,s=-L..L} (Phi_{i-r,j-s} - Phi_{k-r,l-s})^2, indices periodic
double patch_distance_sq(const PatchWeightSpec& spec, int i, int j, int k, int l);

// exp(-d^2 / sigma^2); symmetric under pair swap and 1 on the diagonal
double nlm_weight(const PatchWeightSpec& spec, int i, int j, int k, int l);

// g_N(u) = N^-4 sum over all ordered node pairs of w |u_{ij} - u_{kl}|,
// streamed (the N^2 x N^2 weight matrix is never materialized). Patch values
// are pre-gathered into an N^2 x (2L+1)^2 tensor when it fits the budget.
double g_energy(const GridFunction& u, const PatchWeightSpec& spec,
                std::size_t patch_budget_bytes = std::size_t{1} << 30);

// Pointwise limit weights for fixed patch size. The discrete patch sum has
// (2L+1)^2 terms, so its N -> infinity limit carries the node count:
//   limit_weight_L_nodes = exp(-((2L+1)^2 / sigma^2) (Phi(x)-Phi(y))^2).
// The classical closed form replaces (2L+1)^2 by the patch area factor 4L^2
// and is its large-L approximation:
//   limit_weight_L       = exp(-((4L^2) / sigma^2) (Phi(x)-Phi(y))^2).
double limit_weight_L(const ScalarField& phi, double x1, double y1, double x2, double y2,
                      int half_width, double sigma);
double limit_weight_L_nodes(const ScalarField& phi, double x1, double y1, double x2, double y2,
                            int half_width, double sigma);

struct EllWeightResult {
    double value;       // exp(-c^2 * integral)
    double quad_error;  // |value(M) - value(M/2)|, a self-consistency estimate
};

// Scaled limit weight exp(-c^2 int_{S_ell} (Phi(x+z)-Phi(y+z))^2 dz) with
// S_ell the l1 diamond |z1|+|z2| <= ell, ell in (0, 1/2). Midpoint rule with
// quad_m nodes per axis over the diamond in rotated coordinates.
EllWeightResult limit_weight_ell(const ScalarField& phi, double x1, double y1, double x2,
                                 double y2, double ell, double c, int quad_m = 64);

// Limit energy g_inf(u) = int int w(x,y) |u(x)-u(y)| dx dy for binary
// piecewise-constant u, by exact cell-pair decomposition with a tensor
// midpoint rule (quad_per_cell nodes per axis) for the weight factor.
using WeightField = std::function<double(double, double, double, double)>;
double g_inf(const GridFunction& u, const WeightField& w, int quad_per_cell = 2);

// Sup over sampled index quadruples of |w_{L,N} - w_limit|. All quadruples for
// N <= 16, otherwise a stratified random sample of 1e5 quadruples (fixed seed).
// Fixed-patch kind: Phi sampled at N, L and sigma held fixed, compared against
// limit_weight_L_nodes (the actual limit of the implemented patch sum).
double weight_sup_error_fixed(const ScalarField& phi, int n, int half_width, double sigma,
                              std::uint64_t seed = 0x9e3779b97f4a7c15ull);
// Scaled kind: sigma = N/c and L = round(ell*N), compared against limit_weight_ell.
double weight_sup_error_scaled(const ScalarField& phi, int n, double ell, double c,
                               int quad_m = 64, std::uint64_t seed = 0x9e3779b97f4a7c15ull);

}  // namespace ggl
