// ggl_main.cpp - command line front end: energy evaluation, gradient flows,
// refinement sweeps, shape checks, nonlocal-means weight studies, the
// brute-force min-cut oracle, and the checkerboard non-compactness demo.
//
// Exit codes: 0 success, 2 configuration / input error, 3 numerical abort.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "ggl/flow.hpp"
#include "ggl/harness.hpp"
#include "ggl/io.hpp"
#include "ggl/nlm.hpp"

namespace fs = std::filesystem;
using namespace ggl;

namespace {

std::string timestamp_name() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y%m%d-%H%M%S", std::localtime(&t));
    return buf;
}

// out/<subcommand>/<name>/ with the echoed configuration inside.
fs::path make_out_dir(const std::string& out_root, const std::string& subcommand,
                      std::string name, const std::string& config_echo) {
    if (name.empty()) name = timestamp_name();
    fs::path dir = fs::path(out_root) / subcommand / name;
    fs::create_directories(dir);
    std::ofstream echo(dir / "config.echo");
    echo << config_echo;
    return dir;
}

GridFunction load_grid(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return read_grid_csv(path);
    return read_pgm(path);
}

double wall_seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<int> default_ns(const std::vector<int>& given, std::initializer_list<int> fallback) {
    return given.empty() ? std::vector<int>(fallback) : given;
}

// --- energy ---------------------------------------------------------------

int run_energy(const std::string& functional, const std::string& grid_path,
               const std::string& graph_path, const std::string& vertex_path, double eps,
               double alpha, double chi, const std::string& out_root, const std::string& name) {
    DoubleWell well = standard_well();
    auto t0 = std::chrono::steady_clock::now();
    double value = 0.0;
    int n = 0;
    double param = 0.0;

    std::set<std::string> grid_kinds{"h", "h0", "halpha", "k", "kalpha", "kinf0"};
    std::set<std::string> graph_kinds{"f", "f0"};
    if (grid_kinds.count(functional)) {
        if (grid_path.empty()) throw std::runtime_error("energy: --grid is required for " + functional);
        GridFunction u = load_grid(grid_path);
        n = u.side();
        if (functional == "h") {
            value = h_energy(u, eps, well);
            param = eps;
        } else if (functional == "h0") {
            value = h_zero(u);
        } else if (functional == "halpha") {
            value = h_alpha(u, alpha, well);
            param = alpha;
        } else if (functional == "k") {
            value = k_energy(u, eps, well);
            param = eps;
        } else if (functional == "kalpha") {
            value = k_alpha(u, alpha, well);
            param = alpha;
        } else {
            value = k_inf_zero(u, well);
        }
    } else if (graph_kinds.count(functional)) {
        if (graph_path.empty() || vertex_path.empty())
            throw std::runtime_error("energy: --graph and --vertex are required for " + functional);
        WeightedGraph g = read_graph(graph_path);
        VertexFunction u = read_vertex_csv(vertex_path, g.size());
        n = g.size();
        if (functional == "f") {
            value = f_eps(g, u, eps, chi, well);
            param = eps;
        } else {
            value = f_zero(g, u, chi);
        }
    } else {
        throw std::runtime_error("energy: unknown functional '" + functional + "'");
    }

    std::cout << format_double(value) << "\n";
    if (!out_root.empty()) {
        std::ostringstream echo;
        echo << "functional = " << functional << "\ninput = "
             << (grid_path.empty() ? graph_path : grid_path) << "\neps = " << eps
             << "\nalpha = " << alpha << "\nchi = " << chi << "\n";
        fs::path dir = make_out_dir(out_root, "energy", name, echo.str());
        std::ofstream csv(dir / "report.csv");
        csv << "functional,N,param,value,seconds\n"
            << functional << ',' << n << ',' << format_double(param) << ','
            << format_double(value) << ',' << format_double(wall_seconds(t0)) << '\n';
    }
    return 0;
}

// --- flow -------------------------------------------------------------------

const std::set<std::string> kFlowKeys = {"N",          "eps",  "lambda", "dt", "steps", "r",
                                         "constraint", "seed", "f",      "snapshot_every"};

int run_flow_cmd(const std::string& config_path,
                 const std::map<std::string, std::string>& overrides,
                 const std::string& out_root, const std::string& name) {
    std::map<std::string, std::string> kv;
    if (!config_path.empty()) kv = read_config(config_path);
    for (const auto& [k, v] : overrides) kv[k] = v;
    for (const auto& [k, v] : kv)
        if (!kFlowKeys.count(k)) throw std::runtime_error("flow: unknown config key '" + k + "'");

    auto get = [&](const std::string& k, const std::string& dflt) {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    };
    int n = std::stoi(get("N", "64"));
    FlowConfig cfg;
    cfg.eps = std::stod(get("eps", "1"));
    cfg.lambda = std::stod(get("lambda", "0"));
    cfg.dt = std::stod(get("dt", "0.01"));
    cfg.steps = std::stoi(get("steps", "100"));
    cfg.r = std::stod(get("r", "0"));
    cfg.constraint = constraint_from_string(get("constraint", "none"));
    cfg.seed = std::stoull(get("seed", "1"));
    cfg.snapshot_every = std::stoi(get("snapshot_every", "0"));

    GridFunction f(1);
    bool have_f = kv.count("f") > 0;
    if (have_f) {
        f = load_grid(kv.at("f"));
        if (f.side() != n)
            throw std::runtime_error("flow: data grid side does not match N");
    }
    if (cfg.constraint == ConstraintMode::Fidelity && !have_f)
        throw std::runtime_error("flow: fidelity mode needs f = <path.pgm>");

    std::ostringstream echo;
    for (const auto& [k, v] : kv) echo << k << " = " << v << "\n";
    fs::path dir = make_out_dir(out_root, "flow", name, echo.str());
    fs::create_directories(dir / "frames");

    DoubleWell well = standard_well();
    GridFunction u0 = random_grid(n, cfg.seed);
    SnapshotFn snap = [&dir](int step, const GridFunction& u) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d", step);
        write_pgm((dir / "frames" / (std::string(buf) + ".pgm")).string(), u, true);
        write_grid_csv((dir / "frames" / (std::string(buf) + ".csv")).string(), u);
    };
    FlowTrace trace = run_flow(u0, have_f ? &f : nullptr, cfg, well, nullptr,
                               cfg.snapshot_every > 0 ? snap : SnapshotFn{});

    std::ofstream csv(dir / "trace.csv");
    csv << "step,time,energy,mass,max_update\n";
    for (const TraceRow& r : trace.rows)
        csv << r.step << ',' << format_double(r.time) << ',' << format_double(r.energy) << ','
            << format_double(r.mass) << ',' << format_double(r.max_update) << '\n';
    write_grid_csv((dir / "final.csv").string(), GridFunction(n, trace.final_values));
    write_pgm((dir / "final.pgm").string(), GridFunction(n, trace.final_values), false);
    std::cout << "flow: " << cfg.steps << " steps, final energy "
              << format_double(trace.rows.back().energy) << ", trace written to "
              << (dir / "trace.csv").string() << "\n";
    return 0;
}

// --- sweeps -----------------------------------------------------------------

void write_report(const fs::path& dir, const SweepReport& rep) {
    std::ofstream csv(dir / "report.csv");
    csv << rep.to_csv();
}

int run_gamma_sweep(const std::string& experiment, std::vector<int> ns, double eps, double alpha,
                    std::vector<double> eps_list, const std::string& out_root,
                    const std::string& name) {
    DoubleWell well = standard_well();
    SweepReport rep;
    if (experiment == "k-pointwise") {
        ns = default_ns(ns, {16, 32, 64, 128});
        SmoothField field{
            [](double x, double y) {
                return 0.5 + 0.25 * std::sin(2 * M_PI * x) + 0.15 * std::cos(2 * M_PI * y);
            },
            [](double x, double) { return 0.5 * M_PI * std::cos(2 * M_PI * x); },
            [](double, double y) { return -0.3 * M_PI * std::sin(2 * M_PI * y); }};
        rep = sweep_k_pointwise(field, eps, ns, well);
    } else if (experiment == "alpha-counterexample") {
        ns = default_ns(ns, {8, 16, 32, 64});
        rep = alpha_counterexample(ns, alpha, well);
    } else if (experiment == "recovery") {
        if (eps_list.empty()) eps_list = {0.05, 0.025};
        if (ns.empty())
            for (double e : eps_list) ns.push_back(static_cast<int>(std::lround(50.0 / e)));
        rep = recovery_profile_check(eps_list, ns, well);
    } else {
        throw std::runtime_error("gamma-sweep: unknown experiment '" + experiment + "'");
    }
    std::ostringstream echo;
    echo << "experiment = " << experiment << "\neps = " << eps << "\nalpha = " << alpha << "\n";
    fs::path dir = make_out_dir(out_root, "gamma-sweep", name, echo.str());
    write_report(dir, rep);
    std::cout << rep.to_csv();
    return 0;
}

int run_shapes(int n, double mass, const std::string& out_root, const std::string& name) {
    ShapeCheckResult res = minimizer_shape_check(n, mass);
    const char* winner = res.winner == ShapeWinner::Square ? "square"
                         : res.winner == ShapeWinner::Band ? "band"
                                                           : "tie";
    std::cout << "square " << format_double(res.square_energy) << ", band "
              << format_double(res.band_energy) << ", winner " << winner << "\n";
    if (!out_root.empty()) {
        std::ostringstream echo;
        echo << "N = " << n << "\nM = " << format_double(mass) << "\n";
        fs::path dir = make_out_dir(out_root, "shapes", name, echo.str());
        std::ofstream csv(dir / "report.csv");
        csv << "N,M,square_energy,band_energy,winner\n"
            << n << ',' << format_double(mass) << ',' << format_double(res.square_energy) << ','
            << format_double(res.band_energy) << ',' << winner << '\n';
    }
    return 0;
}

int run_nlm_weights(const std::string& kind, std::vector<int> ns, int L, double sigma,
                    double ell, double c, const std::string& phi_path,
                    const std::string& out_root, const std::string& name) {
    ns = default_ns(ns, {16, 32, 64, 128});
    ScalarField phi;
    if (phi_path.empty()) {
        phi = [](double x, double y) {
            return 0.5 + 0.25 * std::sin(2 * M_PI * x) * std::sin(2 * M_PI * y);
        };
    } else {
        // PGM intensities land in [0,1]; bilinear interpolation turns the
        // image into a field the limit weights can sample anywhere.
        auto image = std::make_shared<GridFunction>(load_grid(phi_path));
        phi = [image](double x, double y) { return bilinear_interpolate(*image, x, y); };
    }
    std::ostringstream echo;
    echo << "kind = " << kind << "\nphi = " << (phi_path.empty() ? "builtin" : phi_path)
         << "\nL = " << L << "\nsigma = " << format_double(sigma)
         << "\nell = " << format_double(ell) << "\nc = " << format_double(c) << "\n";
    fs::path dir = make_out_dir(out_root, "nlm-weights", name, echo.str());
    std::ofstream csv(dir / "report.csv");
    csv << "N,sup_error,seconds\n";
    for (int n : ns) {
        auto t0 = std::chrono::steady_clock::now();
        double err;
        if (kind == "L")
            err = weight_sup_error_fixed(phi, n, L, sigma);
        else if (kind == "ell")
            err = weight_sup_error_scaled(phi, n, ell, c);
        else
            throw std::runtime_error("nlm-weights: kind must be 'L' or 'ell'");
        double secs = wall_seconds(t0);
        csv << n << ',' << format_double(err) << ',' << format_double(secs) << '\n';
        std::cout << "N = " << n << "  sup_error = " << format_double(err) << "\n";
    }
    return 0;
}

int run_mincut(const std::string& graph_path, bool use_barbell, double bridge, double mass,
               bool has_mass, double chi, bool anneal, std::vector<double> schedule, int steps,
               std::uint64_t seed, const std::string& out_root, const std::string& name) {
    if (!use_barbell && graph_path.empty())
        throw std::runtime_error("mincut-oracle: provide --graph FILE or --barbell");
    WeightedGraph g = use_barbell ? barbell_graph(bridge)
                                  : read_graph(graph_path);
    std::optional<double> m = has_mass ? std::optional<double>(mass) : std::nullopt;
    MinCutResult oracle = brute_force_min_cut(g, m, chi);
    std::cout << "oracle cut " << format_double(oracle.cut) << ", f0 "
              << format_double(oracle.energy) << ", labels";
    for (double x : oracle.labels) std::cout << ' ' << static_cast<int>(x);
    std::cout << "\n";

    std::ostringstream echo;
    echo << "graph = " << (use_barbell ? "barbell" : graph_path) << "\nchi = " << chi << "\n";
    fs::path dir = make_out_dir(out_root, "mincut-oracle", name, echo.str());
    std::ofstream csv(dir / "report.csv");
    csv << "what,cut,f0\n";
    csv << "oracle," << format_double(oracle.cut) << ',' << format_double(oracle.energy) << '\n';

    if (anneal) {
        if (!has_mass) throw std::runtime_error("mincut-oracle: --anneal needs --M");
        if (schedule.empty()) schedule = {4.0, 2.0, 1.0, 0.5, 0.25, 0.1, 0.05};
        AnnealResult res = anneal_f_eps(g, schedule, mass, chi, steps, seed);
        std::cout << "anneal f0 " << format_double(res.energy) << ", partition "
                  << (res.partition_match ? "matches" : "differs") << ", labels";
        for (double x : res.labels) std::cout << ' ' << static_cast<int>(x);
        std::cout << "\n";
        csv << "anneal," << format_double(f_zero(g, res.labels, chi) / (2 * chi)) << ','
            << format_double(res.energy) << '\n';
    }
    return 0;
}

int run_noncompact(std::vector<int> ns, const std::string& out_root, const std::string& name) {
    ns = default_ns(ns, {4, 8, 16});
    SweepReport rep = noncompactness_demo(ns);
    fs::path dir = make_out_dir(out_root, "noncompact", name, "N = list\n");
    write_report(dir, rep);
    std::cout << rep.to_csv();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph Ginzburg-Landau energies, gradient flows, and limit experiments"};
    app.require_subcommand(1);
    app.fallthrough();  // global --out/--name may follow the subcommand

    std::string out_root = "out", name;
    app.add_option("--out", out_root, "output root directory");
    app.add_option("--name", name, "run name (default: timestamp)");

    // energy
    auto* energy = app.add_subcommand("energy", "evaluate one functional on one input");
    std::string functional, grid_path, graph_path, vertex_path;
    double eps = 1.0, alpha = 1.0, chi = 0.5;
    energy->add_option("--functional", functional, "f|f0|h|h0|halpha|k|kalpha|kinf0")
        ->required();
    energy->add_option("--grid", grid_path, "grid input (.pgm or .csv)");
    energy->add_option("--graph", graph_path, "graph edge list");
    energy->add_option("--vertex", vertex_path, "vertex values CSV");
    energy->add_option("--eps", eps, "interface parameter");
    energy->add_option("--alpha", alpha, "scaling exponent");
    energy->add_option("--chi", chi, "difference-term constant");

    // flow
    auto* flow = app.add_subcommand("flow", "explicit Euler gradient flow on the grid");
    std::string config_path;
    flow->add_option("--config", config_path, "key = value config file");
    std::map<std::string, std::string> overrides;
    std::string ov_n, ov_eps, ov_lambda, ov_dt, ov_steps, ov_r, ov_constraint, ov_seed, ov_f,
        ov_snap;
    flow->add_option("--N", ov_n, "grid side");
    flow->add_option("--eps", ov_eps, "interface parameter");
    flow->add_option("--lambda", ov_lambda, "fidelity strength");
    flow->add_option("--dt", ov_dt, "time step");
    flow->add_option("--steps", ov_steps, "step count");
    flow->add_option("--r", ov_r, "inner-product exponent");
    flow->add_option("--constraint", ov_constraint, "none|fidelity|mass");
    flow->add_option("--seed", ov_seed, "random seed");
    flow->add_option("--f", ov_f, "fidelity data (.pgm or .csv)");
    flow->add_option("--snapshot-every", ov_snap, "frame cadence (0 = off)");

    // gamma-sweep
    auto* sweep = app.add_subcommand("gamma-sweep", "refinement sweeps against the limits");
    std::string experiment = "k-pointwise";
    std::vector<int> ns;
    std::vector<double> eps_list;
    sweep->add_option("--experiment", experiment, "k-pointwise|alpha-counterexample|recovery");
    sweep->add_option("--N", ns, "grid sides");
    sweep->add_option("--eps", eps, "interface parameter (k-pointwise)");
    sweep->add_option("--alpha", alpha, "scaling exponent (alpha-counterexample)");
    sweep->add_option("--eps-list", eps_list, "eps schedule (recovery)");

    // shapes
    auto* shapes = app.add_subcommand("shapes", "square vs band minimizer check");
    int shapes_n = 8;
    double shapes_m = 0.0625;
    shapes->add_option("--N", shapes_n, "grid side")->required();
    shapes->add_option("--M", shapes_m, "mass (N^2 M must be a perfect square)")->required();

    // nlm-weights
    auto* nlm = app.add_subcommand("nlm-weights", "patch-weight convergence study");
    std::string kind = "L";
    int patch_l = 1;
    double sigma = 1.0, ell = 0.125, scale_c = 1.0;
    nlm->add_option("--kind", kind, "L (fixed patch) or ell (scaled patch)");
    nlm->add_option("--N", ns, "grid sides");
    nlm->add_option("--L", patch_l, "patch half-width");
    nlm->add_option("--sigma", sigma, "Gaussian scale");
    nlm->add_option("--ell", ell, "limit patch radius");
    nlm->add_option("--c", scale_c, "scale constant (sigma = N/c)");
    std::string phi_path;
    nlm->add_option("--phi", phi_path, "image for the patch comparisons (.pgm or .csv)");

    // mincut-oracle
    auto* mincut = app.add_subcommand("mincut-oracle", "exhaustive min cut, optional anneal");
    bool use_barbell = false, anneal = false, has_mass = false;
    double bridge = 0.1, mass = 0.5;
    std::vector<double> schedule;
    int anneal_steps = 400;
    std::uint64_t seed = 1;
    mincut->add_option("--graph", graph_path, "graph edge list");
    mincut->add_flag("--barbell", use_barbell, "use the built-in barbell instance");
    mincut->add_option("--bridge", bridge, "barbell bridge weight");
    mincut->add_option("--M", mass, "mass constraint")->each([&](const std::string&) {
        has_mass = true;
    });
    mincut->add_option("--chi", chi, "difference-term constant");
    mincut->add_flag("--anneal", anneal, "run the annealed gradient flow against the oracle");
    mincut->add_option("--eps-schedule", schedule, "decreasing eps values");
    mincut->add_option("--steps", anneal_steps, "flow steps per eps");
    mincut->add_option("--seed", seed, "random seed");

    // noncompact
    auto* noncompact = app.add_subcommand("noncompact", "bounded energy without convergence");
    noncompact->add_option("--N", ns, "even grid sides");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (energy->parsed())
            return run_energy(functional, grid_path, graph_path, vertex_path, eps, alpha, chi,
                              out_root, name);
        if (flow->parsed()) {
            if (!ov_n.empty()) overrides["N"] = ov_n;
            if (!ov_eps.empty()) overrides["eps"] = ov_eps;
            if (!ov_lambda.empty()) overrides["lambda"] = ov_lambda;
            if (!ov_dt.empty()) overrides["dt"] = ov_dt;
            if (!ov_steps.empty()) overrides["steps"] = ov_steps;
            if (!ov_r.empty()) overrides["r"] = ov_r;
            if (!ov_constraint.empty()) overrides["constraint"] = ov_constraint;
            if (!ov_seed.empty()) overrides["seed"] = ov_seed;
            if (!ov_f.empty()) overrides["f"] = ov_f;
            if (!ov_snap.empty()) overrides["snapshot_every"] = ov_snap;
            return run_flow_cmd(config_path, overrides, out_root, name);
        }
        if (sweep->parsed())
            return run_gamma_sweep(experiment, ns, eps, alpha, eps_list, out_root, name);
        if (shapes->parsed()) return run_shapes(shapes_n, shapes_m, out_root, name);
        if (nlm->parsed())
            return run_nlm_weights(kind, ns, patch_l, sigma, ell, scale_c, phi_path, out_root,
                                   name);
        if (mincut->parsed())
            return run_mincut(graph_path, use_barbell, bridge, mass, has_mass, chi, anneal,
                              schedule, anneal_steps, seed, out_root, name);
        if (noncompact->parsed()) return run_noncompact(ns, out_root, name);
    } catch (const NumericalAbort& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
