#include "ggl/energies.hpp"

#include <cmath>
#include <stdexcept>

namespace ggl {

namespace {

// sum over all cells of squared forward differences in both directions
double grid_diff_sq_sum(const GridFunction& u) {
    int n = u.side();
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
        double row = 0.0;
        for (int i = 0; i < n; ++i) {
            double c = u.value(i, j);
            double dx = u.value(i + 1, j) - c;
            double dy = u.value(i, j + 1) - c;
            row += dx * dx + dy * dy;
        }
        s += row;
    }
    return s;
}

double grid_potential_sum(const GridFunction& u, const DoubleWell& well) {
    double s = 0.0;
    for (double x : u.values()) s += well.w(x);
    return s;
}

}  // namespace

double f_eps(const WeightedGraph& g, const VertexFunction& u, double eps, double chi,
             const DoubleWell& well) {
    if (!(eps > 0.0)) throw std::invalid_argument("f_eps: eps must be positive");
    int m = g.size();
    if (static_cast<int>(u.size()) != m)
        throw std::invalid_argument("f_eps: vertex function size mismatch");
    double diff = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w == 0.0) continue;
            double d = u[i] - u[j];
            diff += w * d * d;
        }
    double pot = 0.0;
    for (double x : u) pot += well.w(x);
    return chi * diff + pot / eps;
}

double f_zero(const WeightedGraph& g, const VertexFunction& u, double chi) {
    if (!is_binary(u)) return kEnergyInfinity;
    double s = 0.0;
    int m = g.size();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w != 0.0) s += w * std::abs(u[i] - u[j]);
        }
    return chi * s;
}

double h_energy(const GridFunction& u, double eps, const DoubleWell& well) {
    if (!(eps > 0.0)) throw std::invalid_argument("h_energy: eps must be positive");
    int n = u.side();
    return grid_diff_sq_sum(u) / n + grid_potential_sum(u, well) / eps;
}

double h_zero(const GridFunction& u) {
    if (!is_binary(u)) return kEnergyInfinity;
    int n = u.side();
    // For binary u the jump count is an exact integer; divide once at the end.
    double jumps = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double c = u.value(i, j);
            jumps += std::abs(u.value(i + 1, j) - c) + std::abs(u.value(i, j + 1) - c);
        }
    return jumps / n;
}

double h_alpha(const GridFunction& u, double alpha, const DoubleWell& well) {
    if (!(alpha > 0.0)) throw std::invalid_argument("h_alpha: alpha must be positive");
    return h_energy(u, std::pow(static_cast<double>(u.side()), -alpha), well);
}

double k_energy(const GridFunction& u, double eps, const DoubleWell& well) {
    if (!(eps > 0.0)) throw std::invalid_argument("k_energy: eps must be positive");
    int n = u.side();
    return eps * grid_diff_sq_sum(u) +
           grid_potential_sum(u, well) / (eps * static_cast<double>(n) * n);
}

double k_alpha(const GridFunction& u, double alpha, const DoubleWell& well) {
    if (!(alpha > 0.0)) throw std::invalid_argument("k_alpha: alpha must be positive");
    return k_energy(u, std::pow(static_cast<double>(u.side()), -alpha), well);
}

double continuum_gl_energy(const SmoothField& field, double eps, const DoubleWell& well,
                           int quad_n) {
    if (!(eps > 0.0)) throw std::invalid_argument("continuum_gl_energy: eps must be positive");
    if (quad_n < 16)
        throw std::invalid_argument("continuum_gl_energy: quadrature grid too small (< 16)");
    ScalarField fx = field.fx, fy = field.fy;
    if (!fx || !fy) {
        // fall back to central differences much finer than the quadrature grid
        double h = 0.25 / quad_n;
        ScalarField f = field.f;
        if (!fx)
            fx = [f, h](double x, double y) { return (f(x + h, y) - f(x - h, y)) / (2 * h); };
        if (!fy)
            fy = [f, h](double x, double y) { return (f(x, y + h) - f(x, y - h)) / (2 * h); };
    }
    double grad = 0.0, pot = 0.0;
    for (int j = 0; j < quad_n; ++j) {
        double y = static_cast<double>(j) / quad_n;
        double grow = 0.0, prow = 0.0;
        for (int i = 0; i < quad_n; ++i) {
            double x = static_cast<double>(i) / quad_n;
            double gx = fx(x, y), gy = fy(x, y);
            grow += gx * gx + gy * gy;
            prow += well.w(field.f(x, y));
        }
        grad += grow;
        pot += prow;
    }
    double cell = 1.0 / (static_cast<double>(quad_n) * quad_n);
    return eps * grad * cell + pot * cell / eps;
}

double k_inf_zero(const GridFunction& u, const DoubleWell& well) {
    if (!is_binary(u))
        throw std::invalid_argument("k_inf_zero: input must be a binary grid function");
    return sigma_w(well) * h_zero(u);
}

}  // namespace ggl
