// graph.hpp - weighted graphs and the discrete function-space calculus on them:
// inner products on vertex/edge functions, gradient, divergence, the Laplacian
// family Delta_r, Dirichlet energy, total variations, and graph cuts.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ggl {

// Functions on vertices are plain value vectors of length m.
using VertexFunction = std::vector<double>;

inline constexpr int kDefaultDenseCap = 4096;

// Finite undirected graph with symmetric nonnegative weights and zero
// diagonal, stored dense. Non-edges carry weight zero.
class WeightedGraph {
public:
    explicit WeightedGraph(int m, int dense_cap = kDefaultDenseCap);

    int size() const { return m_; }
    double weight(int i, int j) const { return w_[idx(i, j)]; }
    double degree(int i) const;

    // Inserts the undirected edge {i,j} with weight w > 0. Rejects self-loops,
    // nonpositive weights, and edges that are already present.
    void add_edge(int i, int j, double w);

    // Row-major m*m weight matrix.
    const std::vector<double>& weights() const { return w_; }

    // Edges as (i, j, w) with i < j, ordered lexicographically.
    std::vector<std::tuple<int, int, double>> edges() const;

private:
    std::size_t idx(int i, int j) const;
    int m_;
    std::vector<double> w_;
};

struct InnerProductParams {
    double r = 0.0;  // vertex-measure exponent, in [0,1]
    double q = 1.0;  // edge-measure exponent, in [1/2,1]
    void validate() const;
};

// Skew-symmetric edge function (a flow): phi_ij = -phi_ji, zero off edges.
// Both invariants are checked at construction.
class EdgeFunction {
public:
    EdgeFunction(const WeightedGraph& g, std::vector<double> values);

    static EdgeFunction zero(const WeightedGraph& g);
    // Masks a raw matrix to the edge set and takes its skew part (A - A^T)/2.
    static EdgeFunction projected(const WeightedGraph& g, const std::vector<double>& raw);

    int size() const { return m_; }
    double operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * m_ + j]; }
    const std::vector<double>& values() const { return v_; }

private:
    EdgeFunction(int m, std::vector<double> v) : m_(m), v_(std::move(v)) {}
    int m_;
    std::vector<double> v_;
};

// <u,v>_V = sum_i u_i v_i d_i^r  (0^0 = 1, so r = 0 reduces to the plain dot product)
double v_inner(const WeightedGraph& g, const VertexFunction& u, const VertexFunction& v, double r);

// <phi,psi>_E = 1/2 sum_{ij} phi_ij psi_ij w_ij^{2q-1}, summed over edges only
double e_inner(const WeightedGraph& g, const EdgeFunction& phi, const EdgeFunction& psi, double q);

// (grad u)_ij = w_ij^{1-q} (u_j - u_i)
EdgeFunction gradient(const WeightedGraph& g, const VertexFunction& u, double q);

// (div phi)_i = (2 d_i^r)^{-1} sum_j w_ij^q (phi_ji - phi_ij); zero at isolated vertices
VertexFunction divergence(const WeightedGraph& g, const EdgeFunction& phi, double r, double q);

// Same formula applied to an arbitrary (not necessarily skew) raw matrix.
VertexFunction divergence_matrix(const WeightedGraph& g, const std::vector<double>& raw,
                                 double r, double q);

// (Delta_r u)_i = sum_j (w_ij / d_i^r)(u_i - u_j); equals div(grad u) for every q
VertexFunction laplacian(const WeightedGraph& g, const VertexFunction& u, double r);

// Dense matrix of Delta_r, row-major m*m: D^{1-r} - D^{-r} W, rows of
// isolated vertices zeroed.
std::vector<double> laplacian_matrix(const WeightedGraph& g, double r);

// 1/4 sum_{ij} w_ij (u_i - u_j)^2; independent of r and q
double dirichlet_energy(const WeightedGraph& g, const VertexFunction& u);

// (sqrt2/2) sum_i sqrt(sum_j w_ij (u_i - u_j)^2)
double tv_isotropic(const WeightedGraph& g, const VertexFunction& u);

// 1/2 sum_{ij} w_ij^q |u_i - u_j|
double tv_anisotropic(const WeightedGraph& g, const VertexFunction& u, double q);

// sum of w_ij over ordered pairs with u_i = 0, u_j = 1; input must be binary
double graph_cut(const WeightedGraph& g, const VertexFunction& u);

// ||phi||_i = sqrt(1/2 sum_j phi_ij^2 w_ij^{2q-1})
double edge_dot_norm(const WeightedGraph& g, const std::vector<double>& phi_values,
                     double q, int i);

// Maximizer of <div phi, u>_V over max_i ||phi||_i <= 1: phi_ij = (grad u)_ij / ||grad u||_i,
// rows with ||grad u||_i = 0 set to zero. Returned raw since it need not be skew.
std::vector<double> tv_maximizer_field(const WeightedGraph& g, const VertexFunction& u, double q);

// Maximizer of <div phi, u>_V over ||phi||_{E,inf} <= 1: the elementwise sign
// of the gradient, zero off edges. Skew, so a genuine flow.
EdgeFunction tva_maximizer_field(const WeightedGraph& g, const VertexFunction& u);

bool is_binary(const VertexFunction& u);

}  // namespace ggl
