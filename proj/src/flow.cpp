#include "ggl/flow.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <stdexcept>

namespace ggl {

ConstraintMode constraint_from_string(const std::string& s) {
    if (s == "none") return ConstraintMode::None;
    if (s == "fidelity") return ConstraintMode::Fidelity;
    if (s == "mass") return ConstraintMode::Mass;
    throw std::invalid_argument("unknown constraint mode '" + s +
                                "' (expected none, fidelity, or mass)");
}

const char* to_string(ConstraintMode m) {
    switch (m) {
        case ConstraintMode::None: return "none";
        case ConstraintMode::Fidelity: return "fidelity";
        case ConstraintMode::Mass: return "mass";
    }
    return "?";
}

namespace {

void validate(const FlowConfig& cfg) {
    if (!(cfg.eps > 0.0)) throw std::invalid_argument("flow: eps must be positive");
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("flow: dt must be positive");
    if (cfg.r < 0.0 || cfg.r > 1.0) throw std::invalid_argument("flow: r must lie in [0,1]");
    if (cfg.lambda < 0.0) throw std::invalid_argument("flow: lambda must be nonnegative");
}

GridFunction grid_rate(const GridFunction& u, const GridFunction* f, const FlowConfig& cfg,
                       const DoubleWell& well) {
    int n = u.side();
    if (cfg.constraint == ConstraintMode::Fidelity) {
        if (f == nullptr) throw std::invalid_argument("flow: fidelity mode needs data f");
        if (f->side() != n) throw std::invalid_argument("flow: u and f grid sides differ");
    }
    double prefactor = std::pow(4.0, -cfg.r);  // degree 4 on the unit-weight grid
    double inv_eps_n2 = 1.0 / (cfg.eps * static_cast<double>(n) * n);
    double kappa =
        cfg.constraint == ConstraintMode::Mass ? lagrange_kappa(u, cfg.eps, well) : 0.0;
    GridFunction rate(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double c = u.value(i, j);
            double nbr = 4.0 * c - u.value(i - 1, j) - u.value(i + 1, j) - u.value(i, j - 1) -
                         u.value(i, j + 1);
            double bracket = 2.0 * cfg.eps * nbr + inv_eps_n2 * well.dw(c);
            if (cfg.constraint == ConstraintMode::Fidelity)
                bracket += 2.0 * cfg.lambda * (c - f->value(i, j));
            else if (cfg.constraint == ConstraintMode::Mass)
                bracket -= kappa;
            rate.set(i, j, -prefactor * bracket);
        }
    return rate;
}

double discrete_l2_sq(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace

GridFunction grad_k_fidelity(const GridFunction& u, const GridFunction& f,
                             const FlowConfig& cfg, const DoubleWell& well) {
    FlowConfig c = cfg;
    c.constraint = ConstraintMode::Fidelity;
    return grid_rate(u, &f, c, well);
}

double lagrange_kappa(const GridFunction& u, double eps, const DoubleWell& well) {
    if (!(eps > 0.0)) throw std::invalid_argument("lagrange_kappa: eps must be positive");
    double s = 0.0;
    for (double x : u.values()) s += well.dw(x);
    double n = static_cast<double>(u.side());
    return s / (eps * n * n * n * n);
}

GridFunction grid_flow_rate(const GridFunction& u, const GridFunction* f, const FlowConfig& cfg,
                            const DoubleWell& well) {
    validate(cfg);
    return grid_rate(u, f, cfg, well);
}

VertexFunction grad_f_graph(const WeightedGraph& g, const VertexFunction& u,
                            const VertexFunction* f, double eps, double chi, double lambda,
                            double r, const DoubleWell& well) {
    if (!(eps > 0.0)) throw std::invalid_argument("grad_f_graph: eps must be positive");
    int m = g.size();
    if (static_cast<int>(u.size()) != m)
        throw std::invalid_argument("grad_f_graph: vertex function size mismatch");
    if (f != nullptr && f->size() != u.size())
        throw std::invalid_argument("grad_f_graph: data f size mismatch");
    VertexFunction rate(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double diff = 0.0;
        for (int j = 0; j < m; ++j) {
            double w = g.weight(i, j);
            if (w != 0.0) diff += w * (u[i] - u[j]);
        }
        double bracket = 4.0 * chi * diff + well.dw(u[i]) / eps;
        if (f != nullptr && lambda > 0.0) bracket += 2.0 * lambda * (u[i] - (*f)[i]);
        double d = g.degree(i);
        double metric = d > 0.0 ? std::pow(d, -r) : 1.0;  // unit metric at isolated vertices
        rate[i] = -metric * bracket;
    }
    return rate;
}

namespace {

template <typename State>
void check_finite(const State& values, int step_index) {
    for (double x : values)
        if (!std::isfinite(x))
            throw NumericalAbort(
                "flow: non-finite state detected at step " + std::to_string(step_index),
                step_index);
}

}  // namespace

GridFunction step_euler(const GridFunction& u, const GridFunction* f, const FlowConfig& cfg,
                        const DoubleWell& well, int step_index) {
    GridFunction rate = grid_flow_rate(u, f, cfg, well);
    int n = u.side();
    GridFunction next(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) next.set(i, j, u.value(i, j) + cfg.dt * rate.value(i, j));
    check_finite(next.values(), step_index);
    return next;
}

VertexFunction step_euler(const WeightedGraph& g, const VertexFunction& u,
                          const VertexFunction* f, const FlowConfig& cfg, const DoubleWell& well,
                          int step_index) {
    validate(cfg);
    const VertexFunction* data = cfg.constraint == ConstraintMode::Fidelity ? f : nullptr;
    if (cfg.constraint == ConstraintMode::Fidelity && data == nullptr)
        throw std::invalid_argument("flow: fidelity mode needs data f");
    VertexFunction rate =
        grad_f_graph(g, u, data, cfg.eps, cfg.chi, cfg.lambda, cfg.r, well);
    VertexFunction next(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) next[i] = u[i] + cfg.dt * rate[i];
    if (cfg.constraint == ConstraintMode::Mass) {
        // The multiplier formula is specific to the 4-regular grid; on general
        // graphs conserve mass by adding back the mean defect after the step.
        double before = 0.0, after = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            before += u[i];
            after += next[i];
        }
        double shift = (before - after) / static_cast<double>(u.size());
        for (double& x : next) x += shift;
    }
    check_finite(next, step_index);
    return next;
}

double grid_stability_dt(const FlowConfig& cfg, int n, const DoubleWell& well) {
    double prefactor = std::pow(4.0, -cfg.r);
    double w2_max = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        // probe |W''| by central differences of W' on [-0.5, 1.5]
        double s = -0.5 + 2.0 * i / 2000.0;
        double h = 1e-5;
        w2_max = std::max(w2_max, std::abs((well.dw(s + h) - well.dw(s - h)) / (2.0 * h)));
    }
    double diffusive = 1.0 / (16.0 * cfg.eps * prefactor);
    double reactive = cfg.eps * static_cast<double>(n) * n / (prefactor * w2_max);
    return std::min(diffusive, reactive);
}

FlowTrace run_flow(const GridFunction& u0, const GridFunction* f, const FlowConfig& cfg,
                   const DoubleWell& well, const GridEnergyFn& energy,
                   const SnapshotFn& snapshot) {
    validate(cfg);
    int n = u0.side();
    if (double bound = grid_stability_dt(cfg, n, well); cfg.dt > bound)
        std::cerr << "ggl flow: warning: dt = " << cfg.dt
                  << " exceeds the linearized stability bound " << bound << "\n";

    GridEnergyFn e = energy;
    if (!e) {
        if (cfg.constraint == ConstraintMode::Fidelity) {
            const GridFunction* data = f;
            e = [cfg, data, &well](const GridFunction& u) {
                return k_energy(u, cfg.eps, well) +
                       cfg.lambda * discrete_l2_sq(u.values(), data->values());
            };
        } else {
            e = [cfg, &well](const GridFunction& u) { return k_energy(u, cfg.eps, well); };
        }
    }

    FlowTrace trace;
    trace.side = n;
    GridFunction u = u0;
    trace.rows.push_back({0, 0.0, e(u), grid_mass(u), 0.0});
    if (snapshot && cfg.snapshot_every > 0) snapshot(0, u);
    for (int s = 1; s <= cfg.steps; ++s) {
        GridFunction next = step_euler(u, f, cfg, well, s);
        double max_update = 0.0;
        for (std::size_t i = 0; i < next.values().size(); ++i)
            max_update = std::max(max_update, std::abs(next.values()[i] - u.values()[i]));
        u = std::move(next);
        trace.rows.push_back({s, s * cfg.dt, e(u), grid_mass(u), max_update});
        if (snapshot && cfg.snapshot_every > 0 && s % cfg.snapshot_every == 0) snapshot(s, u);
    }
    trace.final_values = u.values();
    return trace;
}

FlowTrace run_flow_graph(const WeightedGraph& g, const VertexFunction& u0,
                         const VertexFunction* f, const FlowConfig& cfg,
                         const DoubleWell& well) {
    validate(cfg);
    auto energy = [&](const VertexFunction& u) {
        double e = f_eps(g, u, cfg.eps, cfg.chi, well);
        if (cfg.constraint == ConstraintMode::Fidelity && f != nullptr)
            e += cfg.lambda * discrete_l2_sq(u, *f);
        return e;
    };
    auto mean = [](const VertexFunction& u) {
        double s = 0.0;
        for (double x : u) s += x;
        return s / static_cast<double>(u.size());
    };
    FlowTrace trace;
    VertexFunction u = u0;
    trace.rows.push_back({0, 0.0, energy(u), mean(u), 0.0});
    for (int s = 1; s <= cfg.steps; ++s) {
        VertexFunction next = step_euler(g, u, f, cfg, well, s);
        double max_update = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i)
            max_update = std::max(max_update, std::abs(next[i] - u[i]));
        u = std::move(next);
        trace.rows.push_back({s, s * cfg.dt, energy(u), mean(u), max_update});
    }
    trace.final_values = std::move(u);
    return trace;
}

GridFunction random_grid(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    GridFunction u(n);
    for (double& x : u.values()) x = uni(rng);
    return u;
}

VertexFunction random_vertex_function(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    VertexFunction u(m);
    for (double& x : u) x = uni(rng);
    return u;
}

}  // namespace ggl
