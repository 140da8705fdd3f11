// grid.hpp - real-valued functions on the periodic N x N grid of the unit
// torus, identified with piecewise-constant fields on cells
// [i/N,(i+1)/N) x [j/N,(j+1)/N). Index arithmetic wraps mod N everywhere.
#pragma once

#include <functional>
#include <vector>

namespace ggl {

using ScalarField = std::function<double(double, double)>;

class GridFunction {
public:
    explicit GridFunction(int n, double fill = 0.0);
    GridFunction(int n, std::vector<double> values);  // row-major, index j*n + i

    int side() const { return n_; }

    // Periodic lookup: any integer pair is wrapped onto the grid.
    double value(int i, int j) const { return v_[flat(wrap(i), wrap(j))]; }
    void set(int i, int j, double x) { v_[flat(wrap(i), wrap(j))] = x; }

    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }

    int wrap(int k) const {
        int w = k % n_;
        return w < 0 ? w + n_ : w;
    }

private:
    std::size_t flat(int i, int j) const {
        return static_cast<std::size_t>(j) * n_ + i;
    }
    int n_;
    std::vector<double> v_;
};

// u_{i,j} = f(i/N, j/N)
GridFunction sample(const ScalarField& f, int n);

// L^p norm of the piecewise-constant representative: (N^-2 sum |u|^p)^{1/p}, p >= 1
double lp_norm(const GridFunction& u, double p);

// Exact L^p distance of two piecewise-constant fields, computed on the common
// refinement of side lcm(N1,N2). Refuses when the lcm exceeds the cap.
double lp_distance(const GridFunction& u, const GridFunction& v, double p,
                   long lcm_cap = 10000);

// D_N^k u = N [u(. + e_k/N) - u(.)], k = 1 horizontal, k = 2 vertical
GridFunction diff_quotient(const GridFunction& u, int k);

// Four-corner bilinear interpolation on the cell containing (x,y), periodic.
double bilinear_interpolate(const GridFunction& u, double x, double y);

// Canonical test shapes.
GridFunction indicator_square(int n, int i0, int j0, int k);  // k x k block of ones
GridFunction indicator_band(int n, int i0, int k);            // k consecutive columns
GridFunction checkerboard(int n);                             // needs even n; value 0 at (0,0)

// N^-2 sum u_{i,j}, the integral of the piecewise-constant representative
double grid_mass(const GridFunction& u);

// Torus translation by (di, dj) grid cells.
GridFunction shifted(const GridFunction& u, int di, int dj);

bool is_binary(const GridFunction& u);

}  // namespace ggl
