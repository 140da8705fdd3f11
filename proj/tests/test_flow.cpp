#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ggl/flow.hpp"
#include "test_util.hpp"

using namespace ggl;

namespace {

const DoubleWell kWell = standard_well();

double l2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("grad_k_fidelity at fixed points and at the symmetric point") {
    FlowConfig cfg;
    cfg.eps = 0.7;
    cfg.lambda = 0.3;
    GridFunction well0(4, 1.0);
    GridFunction r0 = grad_k_fidelity(well0, well0, cfg, kWell);
    for (double x : r0.values()) CHECK(x == 0.0);
    GridFunction half(4, 0.5);
    GridFunction r1 = grad_k_fidelity(half, half, cfg, kWell);
    for (double x : r1.values()) CHECK(x == 0.0);
}

TEST_CASE("grad_k_fidelity pointwise value") {
    FlowConfig cfg;
    cfg.eps = 1.0;
    cfg.lambda = 0.0;
    cfg.r = 0.0;
    GridFunction u(2, 0.25);
    GridFunction rate = grad_k_fidelity(u, u, cfg, kWell);
    // -(1/4) W'(1/4) = -(1/4)(3/16) = -3/64
    for (double x : rate.values()) CHECK(x == doctest::Approx(-3.0 / 64).epsilon(1e-15));
}

TEST_CASE("lagrange multiplier") {
    CHECK(lagrange_kappa(GridFunction(8, 0.5), 1.0, kWell) == 0.0);
    int n = 6;
    CHECK(lagrange_kappa(GridFunction(n, 0.25), 1.0, kWell) ==
          doctest::Approx(3.0 / (16.0 * n * n)).epsilon(1e-14));
    GridFunction wells(4);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) wells.set(i, j, (i + j) % 2);
    CHECK(lagrange_kappa(wells, 0.5, kWell) == 0.0);
}

TEST_CASE("grad_f_graph") {
    WeightedGraph g(2);
    g.add_edge(0, 1, 1.0);
    VertexFunction wells = {0.0, 1.0};
    VertexFunction zero =
        grad_f_graph(g, wells, &wells, 1e12, 0.0, 0.4, 0.0, kWell);  // no coupling left
    CHECK(std::abs(zero[0]) < 1e-12);
    CHECK(std::abs(zero[1]) < 1e-12);
    // pure pairwise pull toward consensus at chi = 1/2
    VertexFunction rate = grad_f_graph(g, {0.0, 1.0}, nullptr, 1e12, 0.5, 0.0, 0.0, kWell);
    CHECK(rate[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(rate[1] == doctest::Approx(-2.0).epsilon(1e-10));
}

TEST_CASE("graph gradient matches finite differences of the energy") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        WeightedGraph g = testutil::random_graph(rng, 8);
        int m = g.size();
        VertexFunction u = testutil::random_vertex(rng, m, -0.4, 1.4);
        VertexFunction f = testutil::random_vertex(rng, m, 0.0, 1.0);
        double eps = 0.5, chi = 0.5, lambda = 0.3;
        for (double r : {0.0, 1.0}) {
            VertexFunction rate = grad_f_graph(g, u, &f, eps, chi, lambda, r, kWell);
            for (int i = 0; i < m; ++i) {
                double h = 1e-6;
                VertexFunction up = u, dn = u;
                up[i] += h;
                dn[i] -= h;
                auto energy = [&](const VertexFunction& v) {
                    double e = f_eps(g, v, eps, chi, kWell);
                    for (int t = 0; t < m; ++t) e += lambda * (v[t] - f[t]) * (v[t] - f[t]);
                    return e;
                };
                double d = g.degree(i);
                double metric = d > 0.0 ? std::pow(d, r) : 1.0;
                double fd = -(energy(up) - energy(dn)) / (2.0 * h * metric);
                CHECK(std::abs(rate[i] - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
            }
        }
    }
}

TEST_CASE("grid gradient matches finite differences of the energy") {
    std::mt19937_64 rng(103);
    int n = 6;
    GridFunction u = testutil::random_grid_values(rng, n, -0.4, 1.4);
    GridFunction f = testutil::random_grid_values(rng, n, 0.0, 1.0);
    FlowConfig cfg;
    cfg.eps = 0.8;
    cfg.lambda = 0.25;
    for (double r : {0.0, 1.0}) {
        cfg.r = r;
        GridFunction rate = grad_k_fidelity(u, f, cfg, kWell);
        auto energy = [&](const GridFunction& v) {
            double e = k_energy(v, cfg.eps, kWell);
            for (std::size_t t = 0; t < v.values().size(); ++t) {
                double d = v.values()[t] - f.values()[t];
                e += cfg.lambda * d * d;
            }
            return e;
        };
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                double h = 1e-6;
                GridFunction up = u, dn = u;
                up.set(i, j, u.value(i, j) + h);
                dn.set(i, j, u.value(i, j) - h);
                double fd = -(energy(up) - energy(dn)) / (2.0 * h * std::pow(4.0, r));
                CHECK(std::abs(rate.value(i, j) - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
            }
    }
}

TEST_CASE("euler step at a fixed point and blow-up detection") {
    FlowConfig cfg;
    cfg.eps = 1.0;
    cfg.dt = 0.01;
    GridFunction u(4, 1.0);
    GridFunction next = step_euler(u, nullptr, cfg, kWell, 1);
    CHECK(next.values() == u.values());

    FlowConfig wild;
    wild.eps = 1.0;
    wild.dt = 1e280;
    wild.steps = 10;
    std::mt19937_64 rng(7);
    GridFunction v = testutil::random_grid_values(rng, 8, -10.0, 10.0);
    bool aborted = false;
    try {
        GridFunction s = v;
        for (int t = 1; t <= wild.steps; ++t) s = step_euler(s, nullptr, wild, kWell, t);
    } catch (const NumericalAbort& e) {
        aborted = true;
        CHECK(e.step >= 1);
    }
    CHECK(aborted);
}

TEST_CASE("mass mode conserves the mean to roundoff") {
    FlowConfig cfg;
    cfg.eps = 0.4;
    cfg.dt = 0.004;
    cfg.steps = 200;
    cfg.constraint = ConstraintMode::Mass;
    GridFunction u0 = random_grid(24, 11);
    FlowTrace trace = run_flow(u0, nullptr, cfg, kWell);
    double m0 = trace.rows.front().mass;
    for (const TraceRow& row : trace.rows)
        CHECK(std::abs(row.mass - m0) <= 1e-12 * std::abs(m0));
}

TEST_CASE("r = 1 is the r = 0 flow with the time step rescaled by four") {
    GridFunction u0 = random_grid(16, 19);
    FlowConfig a;
    a.eps = 0.9;
    a.dt = 0.002;
    a.steps = 150;
    a.r = 0.0;
    FlowConfig b = a;
    b.dt = 4.0 * a.dt;
    b.r = 1.0;
    GridFunction ua = u0, ub = u0;
    for (int s = 1; s <= a.steps; ++s) {
        ua = step_euler(ua, nullptr, a, kWell, s);
        ub = step_euler(ub, nullptr, b, kWell, s);
        for (std::size_t t = 0; t < ua.values().size(); ++t)
            CHECK(std::abs(ua.values()[t] - ub.values()[t]) <= 1e-12);
    }
}

TEST_CASE("flows from a well with matching data stay put with zero energy") {
    FlowConfig cfg;
    cfg.eps = 2.0;
    cfg.lambda = 0.5;
    cfg.dt = 0.01;
    cfg.steps = 50;
    cfg.constraint = ConstraintMode::Fidelity;
    GridFunction u0(8, 1.0);
    FlowTrace trace = run_flow(u0, &u0, cfg, kWell);
    for (const TraceRow& row : trace.rows) CHECK(row.energy == 0.0);
    CHECK(trace.final_values == u0.values());
}

TEST_CASE("strong fidelity pins the state to the data") {
    FlowConfig cfg;
    cfg.eps = 0.05;
    cfg.lambda = 10.0;
    cfg.dt = 0.01;
    cfg.steps = 500;
    cfg.constraint = ConstraintMode::Fidelity;
    GridFunction f = indicator_square(16, 4, 4, 8);
    FlowTrace trace = run_flow(random_grid(16, 5), &f, cfg, kWell);
    double linf = 0.0;
    for (std::size_t t = 0; t < f.values().size(); ++t)
        linf = std::max(linf, std::abs(trace.final_values[t] - f.values()[t]));
    CHECK(linf < 0.1);
}

TEST_CASE("energy descends once past the initial transient") {
    FlowConfig cfg;
    cfg.eps = 5.0;
    cfg.lambda = 0.1;
    cfg.dt = 0.01;
    cfg.steps = 300;
    cfg.constraint = ConstraintMode::Fidelity;
    GridFunction f = indicator_square(32, 10, 10, 12);
    FlowTrace trace = run_flow(random_grid(32, 21), &f, cfg, kWell);
    for (std::size_t t = 10; t + 1 < trace.rows.size(); ++t)
        CHECK(trace.rows[t + 1].energy <= trace.rows[t].energy * (1.0 + 1e-12));
    double d0 = l2(random_grid(32, 21).values(), f.values());
    double d1 = l2(trace.final_values, f.values());
    CHECK(d1 < d0);
}

TEST_CASE("graph flow descends f_eps") {
    WeightedGraph g(4);
    g.add_edge(0, 1, 1.0);
    g.add_edge(1, 2, 0.5);
    g.add_edge(2, 3, 1.0);
    FlowConfig cfg;
    cfg.eps = 0.5;
    cfg.chi = 0.5;
    cfg.dt = 0.02;
    cfg.steps = 200;
    FlowTrace trace = run_flow_graph(g, random_vertex_function(4, 13), nullptr, cfg, kWell);
    for (std::size_t t = 0; t + 1 < trace.rows.size(); ++t)
        CHECK(trace.rows[t + 1].energy <= trace.rows[t].energy + 1e-12);
}

TEST_CASE("stability bound at the reference parameters") {
    FlowConfig cfg;
    cfg.eps = 5.0;
    cfg.r = 0.0;
    double bound = grid_stability_dt(cfg, 100, kWell);
    CHECK(bound == doctest::Approx(1.0 / 80.0).epsilon(1e-6));  // diffusive branch
    CHECK(0.01 < bound);                                        // the reference run is stable
}
