#include "ggl/nlm.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "ggl/energies.hpp"

namespace ggl {

PatchWeightSpec::PatchWeightSpec(GridFunction phi_, int half_width_, double sigma_)
    : phi(std::move(phi_)), half_width(half_width_), sigma(sigma_) {
    if (half_width < 0 || 2 * half_width >= phi.side())
        throw std::invalid_argument("PatchWeightSpec: need 0 <= L < N/2");
    if (!(sigma > 0.0)) throw std::invalid_argument("PatchWeightSpec: sigma must be positive");
}

PatchWeightSpec PatchWeightSpec::with_scale_c(GridFunction phi_, int half_width_, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("PatchWeightSpec: c must be positive");
    double sigma = phi_.side() / c;
    return PatchWeightSpec(std::move(phi_), half_width_, sigma);
}

double patch_distance_sq(const PatchWeightSpec& spec, int i, int j, int k, int l) {
    int L = spec.half_width;
    double s = 0.0;
    for (int r = -L; r <= L; ++r)
        for (int t = -L; t <= L; ++t) {
            double d = spec.phi.value(i - r, j - t) - spec.phi.value(k - r, l - t);
            s += d * d;
        }
    return s;
}

double nlm_weight(const PatchWeightSpec& spec, int i, int j, int k, int l) {
    return std::exp(-patch_distance_sq(spec, i, j, k, l) / (spec.sigma * spec.sigma));
}

namespace {

// N^2 x (2L+1)^2 gather of patch values so that each quadruple costs one
// pass over a contiguous pair of rows.
std::vector<double> gather_patches(const GridFunction& phi, int L) {
    int n = phi.side();
    int pl = (2 * L + 1) * (2 * L + 1);
    std::vector<double> patches(static_cast<std::size_t>(n) * n * pl);
    std::size_t at = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            for (int r = -L; r <= L; ++r)
                for (int t = -L; t <= L; ++t) patches[at++] = phi.value(i - r, j - t);
    return patches;
}

double patch_dist_sq_rows(const double* a, const double* b, int len) {
    double s = 0.0;
    for (int t = 0; t < len; ++t) {
        double d = a[t] - b[t];
        s += d * d;
    }
    return s;
}

}  // namespace

double g_energy(const GridFunction& u, const PatchWeightSpec& spec,
                std::size_t patch_budget_bytes) {
    int n = u.side();
    if (n != spec.side()) throw std::invalid_argument("g_energy: grid sides differ");
    if (!is_binary(u)) return kEnergyInfinity;
    int L = spec.half_width;
    int pl = (2 * L + 1) * (2 * L + 1);
    double inv_s2 = 1.0 / (spec.sigma * spec.sigma);

    std::size_t tensor_bytes = static_cast<std::size_t>(n) * n * pl * sizeof(double);
    std::vector<double> patches;
    if (tensor_bytes <= patch_budget_bytes) patches = gather_patches(spec.phi, L);

    double total = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double ua = u.value(i, j);
            double row = 0.0;
            for (int l = 0; l < n; ++l)
                for (int k = 0; k < n; ++k) {
                    if (u.value(k, l) == ua) continue;  // binary: |diff| is 1 or 0
                    double d2 = patches.empty()
                                    ? patch_distance_sq(spec, i, j, k, l)
                                    : patch_dist_sq_rows(
                                          &patches[(static_cast<std::size_t>(j) * n + i) * pl],
                                          &patches[(static_cast<std::size_t>(l) * n + k) * pl],
                                          pl);
                    row += std::exp(-d2 * inv_s2);
                }
            total += row;
        }
    double n2 = static_cast<double>(n) * n;
    return total / (n2 * n2);
}

double limit_weight_L(const ScalarField& phi, double x1, double y1, double x2, double y2,
                      int half_width, double sigma) {
    double d = phi(x1, y1) - phi(x2, y2);
    double l2 = 4.0 * half_width * half_width;
    return std::exp(-l2 * d * d / (sigma * sigma));
}

double limit_weight_L_nodes(const ScalarField& phi, double x1, double y1, double x2, double y2,
                            int half_width, double sigma) {
    double d = phi(x1, y1) - phi(x2, y2);
    double nodes = static_cast<double>(2 * half_width + 1) * (2 * half_width + 1);
    return std::exp(-nodes * d * d / (sigma * sigma));
}

namespace {

// The l1 diamond |z1|+|z2| <= ell is the image of the square [-ell,ell]^2
// under (p,q) -> ((p+q)/2, (p-q)/2) with Jacobian 1/2, so a plain midpoint
// rule covers the diamond exactly (no boundary cells to mask).
double ell_integral(const ScalarField& phi, double x1, double y1, double x2, double y2,
                    double ell, int m) {
    double h = 2.0 * ell / m;
    double s = 0.0;
    for (int b = 0; b < m; ++b) {
        double q = -ell + (b + 0.5) * h;
        for (int a = 0; a < m; ++a) {
            double p = -ell + (a + 0.5) * h;
            double z1 = 0.5 * (p + q), z2 = 0.5 * (p - q);
            double d = phi(x1 + z1, y1 + z2) - phi(x2 + z1, y2 + z2);
            s += d * d;
        }
    }
    return 0.5 * s * h * h;
}

}  // namespace

EllWeightResult limit_weight_ell(const ScalarField& phi, double x1, double y1, double x2,
                                 double y2, double ell, double c, int quad_m) {
    if (!(ell > 0.0) || ell >= 0.5)
        throw std::invalid_argument("limit_weight_ell: ell must lie in (0, 1/2)");
    if (quad_m < 32) throw std::invalid_argument("limit_weight_ell: need at least 32 nodes");
    double c2 = c * c;
    double fine = std::exp(-c2 * ell_integral(phi, x1, y1, x2, y2, ell, quad_m));
    double coarse = std::exp(-c2 * ell_integral(phi, x1, y1, x2, y2, ell, quad_m / 2));
    return {fine, std::abs(fine - coarse)};
}

double g_inf(const GridFunction& u, const WeightField& w, int quad_per_cell) {
    if (!is_binary(u)) throw std::invalid_argument("g_inf: input must be binary");
    int n = u.side();
    int q = quad_per_cell;
    if (q < 1) throw std::invalid_argument("g_inf: need at least one node per cell axis");
    double step = 1.0 / (static_cast<double>(n) * q);
    double total = 0.0;
    for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
            double ua = u.value(i1, j1);
            for (int j2 = 0; j2 < n; ++j2)
                for (int i2 = 0; i2 < n; ++i2) {
                    if (u.value(i2, j2) == ua) continue;
                    double s = 0.0;
                    for (int b1 = 0; b1 < q; ++b1)
                        for (int a1 = 0; a1 < q; ++a1)
                            for (int b2 = 0; b2 < q; ++b2)
                                for (int a2 = 0; a2 < q; ++a2)
                                    s += w((i1 * q + a1 + 0.5) * step,
                                           (j1 * q + b1 + 0.5) * step,
                                           (i2 * q + a2 + 0.5) * step,
                                           (j2 * q + b2 + 0.5) * step);
                    total += s;
                }
        }
    double w4 = step * step * step * step;
    return total * w4;
}

namespace {

struct QuadrupleSampler {
    int n;
    std::mt19937_64 rng;
    std::uniform_int_distribution<int> uni;
    QuadrupleSampler(int n_, std::uint64_t seed) : n(n_), rng(seed), uni(0, n_ - 1) {}
};

// Shared driver: exhaustive for N <= 16, else 1e5 samples stratified over a
// 4 x 4 partition of the first index pair.
template <typename ErrFn>
double sup_over_quadruples(int n, std::uint64_t seed, ErrFn&& err) {
    double sup = 0.0;
    if (n <= 16) {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l)
                    for (int k = 0; k < n; ++k) sup = std::max(sup, err(i, j, k, l));
        return sup;
    }
    QuadrupleSampler s(n, seed);
    constexpr int kStrata = 4;
    constexpr int kSamples = 100000;
    int per_stratum = kSamples / (kStrata * kStrata);
    int block = n / kStrata;
    for (int sj = 0; sj < kStrata; ++sj)
        for (int si = 0; si < kStrata; ++si) {
            std::uniform_int_distribution<int> bx(si * block, (si + 1) * block - 1);
            std::uniform_int_distribution<int> by(sj * block, (sj + 1) * block - 1);
            for (int t = 0; t < per_stratum; ++t) {
                int i = bx(s.rng), j = by(s.rng);
                int k = s.uni(s.rng), l = s.uni(s.rng);
                sup = std::max(sup, err(i, j, k, l));
            }
        }
    return sup;
}

}  // namespace

double weight_sup_error_fixed(const ScalarField& phi, int n, int half_width, double sigma,
                              std::uint64_t seed) {
    PatchWeightSpec spec(sample(phi, n), half_width, sigma);
    std::vector<double> patches = gather_patches(spec.phi, half_width);
    int pl = (2 * half_width + 1) * (2 * half_width + 1);
    double inv_s2 = 1.0 / (sigma * sigma);
    auto err = [&](int i, int j, int k, int l) {
        double d2 = patch_dist_sq_rows(&patches[(static_cast<std::size_t>(j) * n + i) * pl],
                                       &patches[(static_cast<std::size_t>(l) * n + k) * pl], pl);
        double wn = std::exp(-d2 * inv_s2);
        double wl = limit_weight_L_nodes(phi, static_cast<double>(i) / n,
                                         static_cast<double>(j) / n, static_cast<double>(k) / n,
                                         static_cast<double>(l) / n, half_width, sigma);
        return std::abs(wn - wl);
    };
    return sup_over_quadruples(n, seed, err);
}

double weight_sup_error_scaled(const ScalarField& phi, int n, double ell, double c, int quad_m,
                               std::uint64_t seed) {
    if (!(ell > 0.0) || ell >= 0.5)
        throw std::invalid_argument("weight_sup_error_scaled: ell must lie in (0, 1/2)");
    int half_width = static_cast<int>(std::lround(ell * n));
    PatchWeightSpec spec = PatchWeightSpec::with_scale_c(sample(phi, n), half_width, c);
    std::vector<double> patches = gather_patches(spec.phi, half_width);
    int pl = (2 * half_width + 1) * (2 * half_width + 1);
    double inv_s2 = 1.0 / (spec.sigma * spec.sigma);
    double c2 = c * c;

    // Pre-gather the quadrature translates of Phi per grid node when they
    // fit; the limit integral then costs one pass over two contiguous rows,
    // in the same summation order as ell_integral.
    int ql = quad_m * quad_m;
    double h = 2.0 * ell / quad_m;
    std::size_t tensor_bytes = static_cast<std::size_t>(n) * n * ql * sizeof(double);
    std::vector<double> quads;
    if (tensor_bytes <= (std::size_t{1} << 28)) {
        quads.resize(static_cast<std::size_t>(n) * n * ql);
        std::size_t at = 0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                double x = static_cast<double>(i) / n, y = static_cast<double>(j) / n;
                for (int b = 0; b < quad_m; ++b) {
                    double q = -ell + (b + 0.5) * h;
                    for (int a = 0; a < quad_m; ++a) {
                        double p = -ell + (a + 0.5) * h;
                        quads[at++] = phi(x + 0.5 * (p + q), y + 0.5 * (p - q));
                    }
                }
            }
    }

    auto err = [&](int i, int j, int k, int l) {
        double d2 = patch_dist_sq_rows(&patches[(static_cast<std::size_t>(j) * n + i) * pl],
                                       &patches[(static_cast<std::size_t>(l) * n + k) * pl], pl);
        double wn = std::exp(-d2 * inv_s2);
        double wl;
        if (!quads.empty()) {
            double integral =
                0.5 * h * h *
                patch_dist_sq_rows(&quads[(static_cast<std::size_t>(j) * n + i) * ql],
                                   &quads[(static_cast<std::size_t>(l) * n + k) * ql], ql);
            wl = std::exp(-c2 * integral);
        } else {
            wl = std::exp(-c2 * ell_integral(phi, static_cast<double>(i) / n,
                                             static_cast<double>(j) / n,
                                             static_cast<double>(k) / n,
                                             static_cast<double>(l) / n, ell, quad_m));
        }
        return std::abs(wn - wl);
    };
    return sup_over_quadruples(n, seed, err);
}

}  // namespace ggl
