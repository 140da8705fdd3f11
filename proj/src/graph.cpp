#include "ggl/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace ggl {

namespace {

// d^r with the 0^0 = 1 convention; never called with a negative base.
double pow00(double base, double expo) {
    if (base == 0.0) return expo == 0.0 ? 1.0 : 0.0;
    return std::pow(base, expo);
}

void require_size(const VertexFunction& u, int m, const char* what) {
    if (static_cast<int>(u.size()) != m)
        throw std::invalid_argument(std::string(what) + ": vertex function has size " +
                                    std::to_string(u.size()) + ", graph has " +
                                    std::to_string(m) + " vertices");
}

}  // namespace

WeightedGraph::WeightedGraph(int m, int dense_cap) : m_(m) {
    if (m <= 0) throw std::invalid_argument("WeightedGraph: vertex count must be positive");
    if (m > dense_cap)
        throw std::invalid_argument("WeightedGraph: m exceeds dense storage cap " +
                                    std::to_string(dense_cap));
    w_.assign(static_cast<std::size_t>(m) * m, 0.0);
}

std::size_t WeightedGraph::idx(int i, int j) const {
    if (i < 0 || i >= m_ || j < 0 || j >= m_)
        throw std::out_of_range("WeightedGraph: vertex index out of range");
    return static_cast<std::size_t>(i) * m_ + j;
}

double WeightedGraph::degree(int i) const {
    double d = 0.0;
    for (int j = 0; j < m_; ++j) d += w_[idx(i, j)];
    return d;
}

void WeightedGraph::add_edge(int i, int j, double w) {
    if (i == j) throw std::invalid_argument("WeightedGraph: self-loops not allowed");
    if (!(w > 0.0)) throw std::invalid_argument("WeightedGraph: edge weight must be positive");
    std::size_t a = idx(i, j), b = idx(j, i);
    if (w_[a] != 0.0) throw std::invalid_argument("WeightedGraph: duplicate edge");
    w_[a] = w;
    w_[b] = w;
}

std::vector<std::tuple<int, int, double>> WeightedGraph::edges() const {
    std::vector<std::tuple<int, int, double>> out;
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
            if (double w = weight(i, j); w != 0.0) out.emplace_back(i, j, w);
    return out;
}

void InnerProductParams::validate() const {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("InnerProductParams: r must lie in [0,1]");
    if (q < 0.5 || q > 1.0)
        throw std::invalid_argument("InnerProductParams: q must lie in [1/2,1]");
}

EdgeFunction::EdgeFunction(const WeightedGraph& g, std::vector<double> values)
    : m_(g.size()), v_(std::move(values)) {
    if (v_.size() != static_cast<std::size_t>(m_) * m_)
        throw std::invalid_argument("EdgeFunction: values must be an m x m matrix");
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            double x = v_[static_cast<std::size_t>(i) * m_ + j];
            if (g.weight(i, j) == 0.0 && x != 0.0)
                throw std::invalid_argument("EdgeFunction: nonzero value off the edge set");
            if (x != -v_[static_cast<std::size_t>(j) * m_ + i])
                throw std::invalid_argument("EdgeFunction: matrix is not skew-symmetric");
        }
    }
}

EdgeFunction EdgeFunction::zero(const WeightedGraph& g) {
    int m = g.size();
    return EdgeFunction(m, std::vector<double>(static_cast<std::size_t>(m) * m, 0.0));
}

EdgeFunction EdgeFunction::projected(const WeightedGraph& g, const std::vector<double>& raw) {
    int m = g.size();
    if (raw.size() != static_cast<std::size_t>(m) * m)
        throw std::invalid_argument("EdgeFunction::projected: values must be m x m");
    std::vector<double> v(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (g.weight(i, j) != 0.0) {
                double a = raw[static_cast<std::size_t>(i) * m + j];
                double b = raw[static_cast<std::size_t>(j) * m + i];
                v[static_cast<std::size_t>(i) * m + j] = 0.5 * (a - b);
            }
    return EdgeFunction(m, std::move(v));
}

double v_inner(const WeightedGraph& g, const VertexFunction& u, const VertexFunction& v,
               double r) {
    int m = g.size();
    require_size(u, m, "v_inner");
    require_size(v, m, "v_inner");
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += u[i] * v[i] * pow00(g.degree(i), r);
    return s;
}

double e_inner(const WeightedGraph& g, const EdgeFunction& phi, const EdgeFunction& psi,
               double q) {
    int m = g.size();
    if (phi.size() != m || psi.size() != m)
        throw std::invalid_argument("e_inner: edge functions live on a different graph");
    double s = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w == 0.0) continue;
            s += phi(i, j) * psi(i, j) * pow00(w, 2.0 * q - 1.0);
        }
    return 0.5 * s;
}

EdgeFunction gradient(const WeightedGraph& g, const VertexFunction& u, double q) {
    int m = g.size();
    require_size(u, m, "gradient");
    std::vector<double> v(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w == 0.0) continue;
            v[static_cast<std::size_t>(i) * m + j] = pow00(w, 1.0 - q) * (u[j] - u[i]);
        }
    return EdgeFunction(g, std::move(v));
}

VertexFunction divergence_matrix(const WeightedGraph& g, const std::vector<double>& raw,
                                 double r, double q) {
    int m = g.size();
    if (raw.size() != static_cast<std::size_t>(m) * m)
        throw std::invalid_argument("divergence_matrix: values must be m x m");
    VertexFunction out(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double d = g.degree(i);
        if (d == 0.0) continue;  // isolated vertex: divergence is zero
        double s = 0.0;
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w == 0.0) continue;
            s += pow00(w, q) * (raw[static_cast<std::size_t>(j) * m + i] -
                                raw[static_cast<std::size_t>(i) * m + j]);
        }
        out[i] = s / (2.0 * pow00(d, r));
    }
    return out;
}

VertexFunction divergence(const WeightedGraph& g, const EdgeFunction& phi, double r, double q) {
    if (phi.size() != g.size())
        throw std::invalid_argument("divergence: edge function lives on a different graph");
    return divergence_matrix(g, phi.values(), r, q);
}

VertexFunction laplacian(const WeightedGraph& g, const VertexFunction& u, double r) {
    int m = g.size();
    require_size(u, m, "laplacian");
    VertexFunction out(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double d = g.degree(i);
        if (d == 0.0) continue;
        double s = 0.0;
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w == 0.0) continue;
            s += w * (u[i] - u[j]);
        }
        out[i] = s / pow00(d, r);
    }
    return out;
}

std::vector<double> laplacian_matrix(const WeightedGraph& g, double r) {
    int m = g.size();
    std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
        double d = g.degree(i);
        if (d == 0.0) continue;  // row stays zero, consistent with laplacian()
        double dr = pow00(d, r);
        a[static_cast<std::size_t>(i) * m + i] = d / dr;
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w != 0.0) a[static_cast<std::size_t>(i) * m + j] -= w / dr;
        }
    }
    return a;
}

double dirichlet_energy(const WeightedGraph& g, const VertexFunction& u) {
    int m = g.size();
    require_size(u, m, "dirichlet_energy");
    double s = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w == 0.0) continue;
            double d = u[i] - u[j];
            s += w * d * d;
        }
    return 0.25 * s;
}

double tv_isotropic(const WeightedGraph& g, const VertexFunction& u) {
    int m = g.size();
    require_size(u, m, "tv_isotropic");
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        double row = 0.0;
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w == 0.0) continue;
            double d = u[i] - u[j];
            row += w * d * d;
        }
        s += std::sqrt(row);
    }
    return 0.5 * std::sqrt(2.0) * s;
}

double tv_anisotropic(const WeightedGraph& g, const VertexFunction& u, double q) {
    int m = g.size();
    require_size(u, m, "tv_anisotropic");
    double s = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w == 0.0) continue;
            s += pow00(w, q) * std::abs(u[i] - u[j]);
        }
    return 0.5 * s;
}

bool is_binary(const VertexFunction& u) {
    for (double x : u)
        if (x != 0.0 && x != 1.0) return false;
    return true;
}

double graph_cut(const WeightedGraph& g, const VertexFunction& u) {
    int m = g.size();
    require_size(u, m, "graph_cut");
    if (!is_binary(u)) throw std::invalid_argument("graph_cut: labeling must be binary");
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        if (u[i] != 0.0) continue;
        for (int j = 0; j < m; ++j)
            if (u[j] == 1.0) s += g.weight(i, j);
    }
    return s;
}

double edge_dot_norm(const WeightedGraph& g, const std::vector<double>& phi_values, double q,
                     int i) {
    int m = g.size();
    if (phi_values.size() != static_cast<std::size_t>(m) * m)
        throw std::invalid_argument("edge_dot_norm: values must be m x m");
    double s = 0.0;
    for (int j = 0; j < m; ++j) {
        double w = g.weight(i, j);
        if (w == 0.0) continue;
        double x = phi_values[static_cast<std::size_t>(i) * m + j];
        s += x * x * pow00(w, 2.0 * q - 1.0);
    }
    return std::sqrt(0.5 * s);
}

EdgeFunction tva_maximizer_field(const WeightedGraph& g, const VertexFunction& u) {
    int m = g.size();
    require_size(u, m, "tva_maximizer_field");
    std::vector<double> phi(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (g.weight(i, j) == 0.0) continue;
            double d = u[j] - u[i];
            phi[static_cast<std::size_t>(i) * m + j] = d > 0.0 ? 1.0 : d < 0.0 ? -1.0 : 0.0;
        }
    return EdgeFunction(g, std::move(phi));
}

std::vector<double> tv_maximizer_field(const WeightedGraph& g, const VertexFunction& u,
                                       double q) {
    int m = g.size();
    EdgeFunction grad = gradient(g, u, q);
    std::vector<double> phi(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
        double s = edge_dot_norm(g, grad.values(), q, i);
        if (s == 0.0) continue;  // not determined there; zero by convention
        for (int j = 0; j < m; ++j)
            if (g.weight(i, j) != 0.0)
                phi[static_cast<std::size_t>(i) * m + j] = grad(i, j) / s;
    }
    return phi;
}

}  // namespace ggl
