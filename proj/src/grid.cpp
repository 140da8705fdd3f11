#include "ggl/grid.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ggl {

GridFunction::GridFunction(int n, double fill) : n_(n) {
    if (n <= 0) throw std::invalid_argument("GridFunction: side must be positive");
    v_.assign(static_cast<std::size_t>(n) * n, fill);
}

GridFunction::GridFunction(int n, std::vector<double> values) : n_(n), v_(std::move(values)) {
    if (n <= 0) throw std::invalid_argument("GridFunction: side must be positive");
    if (v_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("GridFunction: values must have N*N entries");
}

GridFunction sample(const ScalarField& f, int n) {
    GridFunction u(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            u.set(i, j, f(static_cast<double>(i) / n, static_cast<double>(j) / n));
    return u;
}

double lp_norm(const GridFunction& u, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    double s = 0.0;
    for (double x : u.values()) s += std::pow(std::abs(x), p);
    int n = u.side();
    return std::pow(s / (static_cast<double>(n) * n), 1.0 / p);
}

double lp_distance(const GridFunction& u, const GridFunction& v, double p, long lcm_cap) {
    if (p < 1.0) throw std::invalid_argument("lp_distance: p must be >= 1");
    long n1 = u.side(), n2 = v.side();
    long l = std::lcm(n1, n2);
    if (l > lcm_cap)
        throw std::invalid_argument("lp_distance: common refinement side lcm(" +
                                    std::to_string(n1) + "," + std::to_string(n2) + ") = " +
                                    std::to_string(l) + " exceeds cap " +
                                    std::to_string(lcm_cap) +
                                    "; refusing the exact comparison");
    long s1 = l / n1, s2 = l / n2;  // fine cells per coarse cell, each axis
    double s = 0.0;
    for (long fj = 0; fj < l; ++fj) {
        int j1 = static_cast<int>(fj / s1), j2 = static_cast<int>(fj / s2);
        double row = 0.0;
        for (long fi = 0; fi < l; ++fi) {
            double d = u.value(static_cast<int>(fi / s1), j1) -
                       v.value(static_cast<int>(fi / s2), j2);
            row += std::pow(std::abs(d), p);
        }
        s += row;
    }
    return std::pow(s / (static_cast<double>(l) * l), 1.0 / p);
}

GridFunction diff_quotient(const GridFunction& u, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("diff_quotient: direction must be 1 or 2");
    int n = u.side();
    GridFunction d(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double ahead = (k == 1) ? u.value(i + 1, j) : u.value(i, j + 1);
            d.set(i, j, n * (ahead - u.value(i, j)));
        }
    return d;
}

double bilinear_interpolate(const GridFunction& u, double x, double y) {
    int n = u.side();
    double xs = x * n, ys = y * n;
    int i = static_cast<int>(std::floor(xs)), j = static_cast<int>(std::floor(ys));
    double fx = xs - i, fy = ys - j;  // fractional position inside the cell
    double u00 = u.value(i, j), u10 = u.value(i + 1, j);
    double u01 = u.value(i, j + 1), u11 = u.value(i + 1, j + 1);
    return u00 * (1.0 - fx) * (1.0 - fy) + u10 * fx * (1.0 - fy) + u01 * (1.0 - fx) * fy +
           u11 * fx * fy;
}

GridFunction indicator_square(int n, int i0, int j0, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("indicator_square: need 0 <= K <= N");
    GridFunction u(n);
    for (int dj = 0; dj < k; ++dj)
        for (int di = 0; di < k; ++di) u.set(i0 + di, j0 + dj, 1.0);
    return u;
}

GridFunction indicator_band(int n, int i0, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("indicator_band: need 0 <= K <= N");
    GridFunction u(n);
    for (int di = 0; di < k; ++di)
        for (int j = 0; j < n; ++j) u.set(i0 + di, j, 1.0);
    return u;
}

GridFunction checkerboard(int n) {
    if (n % 2 != 0)
        throw std::invalid_argument(
            "checkerboard: side must be even for exact alternation on the torus");
    GridFunction u(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) u.set(i, j, static_cast<double>((i + j) & 1));
    return u;
}

double grid_mass(const GridFunction& u) {
    double s = 0.0;
    for (double x : u.values()) s += x;
    int n = u.side();
    return s / (static_cast<double>(n) * n);
}

GridFunction shifted(const GridFunction& u, int di, int dj) {
    int n = u.side();
    GridFunction out(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.set(i, j, u.value(i - di, j - dj));
    return out;
}

bool is_binary(const GridFunction& u) {
    for (double x : u.values())
        if (x != 0.0 && x != 1.0) return false;
    return true;
}

}  // namespace ggl
