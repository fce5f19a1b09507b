// Command-line driver for the Burgers stabilization lab.
//
//   burgers_lab convergence [options]   error table over an N list
//   burgers_lab single      [options]   one run: final state, diagnostics, estimator
//   burgers_lab checks      [options]   invariant suite and kernel oracles
//   burgers_lab reference   [options]   samples of the exact solution
//
// Exit status: 0 ok, 1 solver failure, 2 invariant failure, 3 bad configuration.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "burgers/experiment.hpp"

namespace {

enum Exit { kOk = 0, kSolver = 1, kInvariant = 2, kConfig = 3 };

struct Flags {
    std::string config_file;
    std::string case_name, knots, viscosity, eps, n_list, delta_list, nu1_variant, init_proj, out, backend;
    double nu = 0.0, t_final = 0.0, cfl = 0.0;
    std::size_t n = 0, ref_n = 0;
    std::uint64_t seed = 0;
};

burgers::ExperimentConfig build_config(const CLI::App& app, const Flags& f) {
    using namespace burgers;
    ExperimentConfig c = f.config_file.empty() ? ExperimentConfig{} : load_config_file(f.config_file);
    auto given = [&](const char* name) { return app.count(name) > 0; };

    if (given("--case")) c.case_kind = parse_case(f.case_name);
    if (given("--knots")) c.knots = parse_knots(f.knots);
    if (given("--viscosity")) c.viscosity = parse_viscosity(f.viscosity);
    if (given("--eps")) c.epsilon = parse_epsilon(f.eps);
    if (given("--nu")) c.nu = f.nu;
    if (given("--t-final")) c.t_final = f.t_final;
    if (given("--cfl")) c.cfl = f.cfl;
    if (given("--n") && given("--n-list")) throw ConfigError("give either --n or --n-list");
    if (given("--n")) c.n_list = {f.n};
    if (given("--n-list")) c.n_list = parse_n_list(f.n_list);
    if (given("--delta-list")) c.delta_list = parse_delta_list(f.delta_list);
    if (given("--ref-n")) c.ref_n = f.ref_n;
    if (given("--nu1-variant")) c.nu1_variant = parse_nu1_variant(f.nu1_variant);
    if (given("--init-proj")) c.init_proj = parse_init_proj(f.init_proj);
    if (given("--out")) c.out = f.out;
    if (given("--seed")) c.seed = f.seed;
    if (given("--backend")) c.backend = parse_backend(f.backend);
    return c;
}

int cmd_convergence(const burgers::ExperimentConfig& c) {
    const auto result = burgers::run_convergence(c);
    const std::string csv = burgers::convergence_csv(result.rows);
    if (c.out.empty()) {
        std::cout << csv;
        std::cerr << burgers::render_table(result.rows);
    } else {
        burgers::write_text(c.out, csv);
        std::cout << burgers::render_table(result.rows);
    }
    for (const auto& [n, msg] : result.failures) std::cerr << "solve failed at N=" << n << ": " << msg << '\n';
    return result.ok() ? kOk : kSolver;
}

int cmd_single(const burgers::ExperimentConfig& c) {
    const auto r = burgers::run_single(c);
    const auto& traj = r.trajectory;
    if (!c.out.empty()) burgers::write_single_outputs(r, c.out);

    std::fprintf(stderr, "N=%zu steps=%zu U0=%.6g D0=%.6g\n", traj.mesh().n_elems(), traj.steps.size() - 1,
                 r.constants.u0_sup, r.constants.d0);
    for (const auto& chk : r.invariants.checks) {
        std::fprintf(stderr, "  %-16s %s margin %.3e%s\n", chk.name.c_str(),
                     !chk.checked ? "skip" : (chk.passed() ? "ok  " : "FAIL"), chk.worst_margin,
                     chk.note.empty() ? "" : ("  (" + chk.note + ")").c_str());
    }
    if (c.out.empty()) std::cout << burgers::estimator_csv(r.estimator);
    if (traj.failure) {
        std::cerr << "solve failed at step " << traj.failure->step << ": " << traj.failure->message << '\n';
        return kSolver;
    }
    return kOk;
}

int cmd_checks(burgers::ExperimentConfig c) {
    c.allow_unstable_cfl = true;  // the negative control runs above cfl 1 on purpose
    const auto r = burgers::run_checks(c);
    for (const auto& line : r.lines) std::cout << line << '\n';
    std::cout << (r.ok() ? "all checks passed" : "checks FAILED") << '\n';
    if (!r.invariants_ok || !r.oracles_ok) return kInvariant;
    return r.solver_ok ? kOk : kSolver;
}

int cmd_reference(const burgers::ExperimentConfig& c, bool n_given) {
    const std::size_t n = n_given ? c.n_list.front() : c.reference_n();
    burgers::write_text(c.out, burgers::run_reference(c, n));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stabilized finite elements for periodic Burgers' equation"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    app.add_option("--config", f.config_file, "JSON file with experiment settings (flags override it)");
    app.add_option("--case", f.case_name, "smooth | nonsmooth | custom");
    app.add_option("--knots", f.knots, "custom data as x:u pairs, e.g. 0:0,0.75:1");
    app.add_option("--viscosity", f.viscosity, "linear | nonlinear");
    app.add_option("--eps", f.eps, "0 | h | <float>");
    app.add_option("--nu", f.nu, "physical viscosity");
    app.add_option("--t-final", f.t_final, "final time");
    app.add_option("--cfl", f.cfl, "time step safety factor");
    app.add_option("--n", f.n, "number of elements (single value)");
    app.add_option("--n-list", f.n_list, "comma-separated element counts, doubling");
    app.add_option("--delta-list", f.delta_list, "comma-separated filter widths; 'h' is the mesh size");
    app.add_option("--ref-n", f.ref_n, "reference mesh size");
    app.add_option("--nu1-variant", f.nu1_variant, "ratio | simplified");
    app.add_option("--init-proj", f.init_proj, "l2 | interp");
    app.add_option("--out", f.out, "output file (directory for 'single')");
    app.add_option("--seed", f.seed, "seed for the randomized oracle checks");
    app.add_option("--backend", f.backend, "omp | serial");

    auto* conv = app.add_subcommand("convergence", "error table with rates over the N list");
    auto* single = app.add_subcommand("single", "one run with diagnostics and estimator");
    auto* checks = app.add_subcommand("checks", "invariant suite and kernel oracles");
    auto* ref = app.add_subcommand("reference", "dump exact solution samples at the final time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        burgers::ExperimentConfig c = build_config(app, f);
        if (*checks) return cmd_checks(c);
        if (*ref) return cmd_reference(c, app.count("--n") > 0);
        c.validate();
        if (*conv) return cmd_convergence(c);
        if (*single) return cmd_single(c);
    } catch (const burgers::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfig;
    } catch (const burgers::MeshMismatch& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfig;
    } catch (const burgers::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSolver;
    }
    return kOk;
}
