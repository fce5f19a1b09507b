#include "burgers/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "burgers/filter.hpp"
#include "burgers/oracles.hpp"

namespace burgers {

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string full(double v) { return fmt("%.17g", v); }

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ConfigError("empty entry in list '" + s + "'");
        out.push_back(item.substr(b, e - b + 1));
    }
    if (out.empty()) throw ConfigError("empty list");
    return out;
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw ConfigError(std::string("invalid ") + what + " '" + s + "'");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// config

double EpsilonSpec::resolve(double h) const noexcept {
    switch (mode) {
        case Mode::Zero: return 0.0;
        case Mode::MeshSize: return h;
        case Mode::Literal: return value;
    }
    return 0.0;
}

std::string EpsilonSpec::label() const {
    switch (mode) {
        case Mode::Zero: return "0";
        case Mode::MeshSize: return "h";
        case Mode::Literal: return fmt("%g", value);
    }
    return "?";
}

std::string DeltaSpec::label() const {
    if (mesh_size) return "dh";
    if (value == 1.0) return "d1";
    return "d" + fmt("%g", value);
}

std::size_t ExperimentConfig::reference_n() const noexcept {
    if (ref_n) return *ref_n;
    return case_kind == CaseKind::Smooth ? 6400 : 12800;
}

void ExperimentConfig::validate() const {
    if (n_list.empty()) throw ConfigError("N list is empty");
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        if (n_list[k] < Mesh::min_elems) throw ConfigError("every N must be at least 3");
        if (k > 0 && n_list[k] != 2 * n_list[k - 1]) {
            throw ConfigError("N list must double from entry to entry (" + std::to_string(n_list[k - 1]) + " -> " +
                              std::to_string(n_list[k]) + ")");
        }
    }
    const std::size_t rn = reference_n();
    for (std::size_t n : n_list) {
        if (rn % n != 0) {
            throw ConfigError("reference resolution " + std::to_string(rn) + " is not a multiple of N=" +
                              std::to_string(n));
        }
    }
    if (delta_list.empty()) throw ConfigError("delta list is empty");
    for (const auto& d : delta_list) {
        if (!d.mesh_size && !(d.value > 0.0)) throw ConfigError("filter widths must be positive");
    }
    if (epsilon && epsilon->mode == EpsilonSpec::Mode::Literal && !(epsilon->value >= 0.0)) {
        throw ConfigError("epsilon must be >= 0");
    }
    if (case_kind == CaseKind::Custom) {
        if (knots.empty()) throw ConfigError("custom case needs knots");
        std::vector<Breakpoint> bp;
        for (const auto& [x, v] : knots) bp.push_back({x, v, v, false});
        try {
            PwLinearExact{bp, 0.0}.validate();
        } catch (const ReferenceError& e) {
            throw ConfigError(std::string("custom knots: ") + e.what());
        }
    }
    solver_config(n_list.front()).validate();
}

SolverConfig ExperimentConfig::solver_config(std::size_t n) const {
    SolverConfig sc;
    sc.mesh = Mesh(n);
    sc.viscosity.kind = viscosity;
    sc.viscosity.nu = nu;
    sc.viscosity.epsilon = epsilon_or_zero().resolve(sc.mesh.h());
    sc.viscosity.nu1_variant = nu1_variant;
    sc.t_final = t_final;
    sc.cfl = cfl;
    sc.initial_projection = init_proj;
    sc.backend = backend;
    sc.allow_unstable_cfl = allow_unstable_cfl;
    return sc;
}

CaseKind parse_case(const std::string& s) {
    const std::string v = lower(s);
    if (v == "smooth") return CaseKind::Smooth;
    if (v == "nonsmooth") return CaseKind::Nonsmooth;
    if (v == "custom") return CaseKind::Custom;
    throw ConfigError("unknown case '" + s + "' (smooth|nonsmooth|custom)");
}

ViscosityKind parse_viscosity(const std::string& s) {
    const std::string v = lower(s);
    if (v == "linear") return ViscosityKind::Linear;
    if (v == "nonlinear") return ViscosityKind::Nonlinear;
    throw ConfigError("unknown viscosity '" + s + "' (linear|nonlinear)");
}

EpsilonSpec parse_epsilon(const std::string& s) {
    const std::string v = lower(s);
    if (v == "h") return {EpsilonSpec::Mode::MeshSize, 0.0};
    const double x = parse_double(v, "epsilon");
    if (!(x >= 0.0) || !std::isfinite(x)) throw ConfigError("epsilon must be >= 0");
    if (x == 0.0) return {EpsilonSpec::Mode::Zero, 0.0};
    return {EpsilonSpec::Mode::Literal, x};
}

std::vector<std::size_t> parse_n_list(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& item : split(s, ',')) {
        const double v = parse_double(item, "N");
        if (!(v >= 1.0) || v != std::floor(v) || v > 1e9) throw ConfigError("invalid N '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::vector<DeltaSpec> parse_delta_list(const std::string& s) {
    std::vector<DeltaSpec> out;
    for (const auto& item : split(s, ',')) {
        if (lower(item) == "h") {
            out.push_back({true, 0.0});
        } else {
            const double v = parse_double(item, "delta");
            if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("filter widths must be positive");
            out.push_back({false, v});
        }
    }
    return out;
}

Nu1Variant parse_nu1_variant(const std::string& s) {
    const std::string v = lower(s);
    if (v == "ratio") return Nu1Variant::Ratio;
    if (v == "simplified") return Nu1Variant::Simplified;
    throw ConfigError("unknown nu1 variant '" + s + "' (ratio|simplified)");
}

InitialProjection parse_init_proj(const std::string& s) {
    const std::string v = lower(s);
    if (v == "l2") return InitialProjection::ConsistentL2;
    if (v == "interp") return InitialProjection::NodalInterpolant;
    throw ConfigError("unknown initial projection '" + s + "' (l2|interp)");
}

Backend parse_backend(const std::string& s) {
    const std::string v = lower(s);
    if (v == "omp" || v == "openmp") return Backend::OpenMP;
    if (v == "serial") return Backend::Serial;
    throw ConfigError("unknown backend '" + s + "' (omp|serial)");
}

std::vector<std::pair<double, double>> parse_knots(const std::string& s) {
    std::vector<std::pair<double, double>> out;
    for (const auto& item : split(s, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError("knot '" + item + "' is not position:value");
        out.emplace_back(parse_double(item.substr(0, colon), "knot position"),
                         parse_double(item.substr(colon + 1), "knot value"));
    }
    return out;
}

void apply_config_json(ExperimentConfig& c, const std::string& json_text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");

    auto str = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto num = [](const json& v, const char* key) {
        if (!v.is_number()) throw ConfigError(std::string("config key '") + key + "' must be a number");
        return v.get<double>();
    };

    for (const auto& [key, v] : j.items()) {
        if (key == "case") {
            c.case_kind = parse_case(str(v));
        } else if (key == "knots") {
            if (v.is_string()) {
                c.knots = parse_knots(v.get<std::string>());
            } else {
                c.knots.clear();
                for (const auto& k : v) {
                    if (!k.is_array() || k.size() != 2) throw ConfigError("knots must be [position, value] pairs");
                    c.knots.emplace_back(num(k[0], "knots"), num(k[1], "knots"));
                }
            }
        } else if (key == "viscosity") {
            c.viscosity = parse_viscosity(str(v));
        } else if (key == "eps") {
            c.epsilon = parse_epsilon(str(v));
        } else if (key == "nu") {
            c.nu = num(v, "nu");
        } else if (key == "t_final") {
            c.t_final = num(v, "t_final");
        } else if (key == "cfl") {
            c.cfl = num(v, "cfl");
        } else if (key == "n_list") {
            if (v.is_array()) {
                std::string joined;
                for (const auto& x : v) joined += (joined.empty() ? "" : ",") + str(x);
                c.n_list = parse_n_list(joined);
            } else {
                c.n_list = parse_n_list(str(v));
            }
        } else if (key == "delta_list") {
            if (v.is_array()) {
                std::string joined;
                for (const auto& x : v) joined += (joined.empty() ? "" : ",") + str(x);
                c.delta_list = parse_delta_list(joined);
            } else {
                c.delta_list = parse_delta_list(str(v));
            }
        } else if (key == "ref_n") {
            const double r = num(v, "ref_n");
            if (!(r >= 3.0) || r != std::floor(r)) throw ConfigError("ref_n must be an integer >= 3");
            c.ref_n = static_cast<std::size_t>(r);
        } else if (key == "nu1_variant") {
            c.nu1_variant = parse_nu1_variant(str(v));
        } else if (key == "init_proj") {
            c.init_proj = parse_init_proj(str(v));
        } else if (key == "out") {
            c.out = str(v);
        } else if (key == "seed") {
            if (!v.is_number_unsigned()) throw ConfigError("config key 'seed' must be a non-negative integer");
            c.seed = v.get<std::uint64_t>();
        } else if (key == "backend") {
            c.backend = parse_backend(str(v));
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    ExperimentConfig c;
    apply_config_json(c, ss.str());
    return c;
}

// ---------------------------------------------------------------------------
// cases

CaseData make_case(const ExperimentConfig& config) {
    CaseData d;
    switch (config.case_kind) {
        case CaseKind::Smooth:
            d.u0 = smooth_default();
            d.du0 = smooth_default_derivative;
            return d;
        case CaseKind::Nonsmooth: d.pw = nonsmooth_default(); break;
        case CaseKind::Custom:
            try {
                d.pw = PwLinearExact::from_knots(config.knots);
            } catch (const ReferenceError& e) {
                throw ConfigError(std::string("custom knots: ") + e.what());
            }
            break;
    }
    const PwLinearExact pw = *d.pw;
    d.u0 = [pw](double x) { return pw.evaluate(x); };
    return d;
}

NodalField reference_solution(const CaseData& data, double t, const Mesh& fine) {
    if (data.pw) return sample_reference(front_tracking_solve(*data.pw, t), fine);
    return sample_reference(SmoothReference{data.u0, t}, fine);
}

// ---------------------------------------------------------------------------
// convergence

ConvergenceResult run_convergence(const ExperimentConfig& config) {
    config.validate();
    const CaseData data = make_case(config);
    const Mesh fine(config.reference_n());
    const NodalField ref = reference_solution(data, config.t_final, fine);

    const std::size_t m = config.n_list.size();
    std::vector<std::optional<ErrorReport>> rows(m);
    std::vector<std::string> errors(m);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < m; ++k) {
        try {
            const std::size_t n = config.n_list[k];
            const SolverConfig sc = config.solver_config(n);
            const Trajectory traj = solve(sc, data.u0);
            if (!traj.complete()) {
                errors[k] = traj.failure ? traj.failure->message : "solve did not reach the final time";
                continue;
            }
            ErrorReport r;
            r.n_elems = n;
            const NormPair e = error_norms(traj.final_state, ref);
            r.l1_error = e.l1;
            r.l2_error = e.l2;
            for (const auto& d : config.delta_list) {
                const double delta = d.resolve(sc.mesh.h());
                r.filtered.push_back({d.label(), delta, filtered_error(ref, traj.final_state, FilterSpec{delta, fine}), {}});
            }
            rows[k] = std::move(r);
        } catch (const std::exception& e) {
            errors[k] = e.what();
        }
    }

    ConvergenceResult out;
    std::vector<ErrorReport> good;
    for (std::size_t k = 0; k < m; ++k) {
        if (rows[k]) {
            good.push_back(*rows[k]);
        } else {
            out.failures.emplace_back(config.n_list[k], errors[k]);
        }
    }
    // rates only across an unbroken doubling sequence
    std::vector<ErrorReport> chunk;
    for (auto& r : good) {
        if (!chunk.empty() && r.n_elems != 2 * chunk.back().n_elems) {
            for (auto& c : convergence_rates(std::move(chunk))) out.rows.push_back(std::move(c));
            chunk.clear();
        }
        chunk.push_back(std::move(r));
    }
    for (auto& c : convergence_rates(std::move(chunk))) out.rows.push_back(std::move(c));
    return out;
}

std::string convergence_csv(const std::vector<ErrorReport>& rows) {
    std::ostringstream os;
    os << "n,l1,l1_rate,l2,l2_rate";
    if (!rows.empty()) {
        for (const auto& f : rows.front().filtered) os << ',' << f.label << ',' << f.label << "_rate";
    }
    os << '\n';
    auto rate = [](const std::optional<double>& r) { return r ? full(*r) : std::string(); };
    for (const auto& r : rows) {
        os << r.n_elems << ',' << full(r.l1_error) << ',' << rate(r.l1_rate) << ',' << full(r.l2_error) << ','
           << rate(r.l2_rate);
        for (const auto& f : r.filtered) os << ',' << full(f.value) << ',' << rate(f.rate);
        os << '\n';
    }
    return os.str();
}

std::string render_table(const std::vector<ErrorReport>& rows) {
    std::vector<std::string> head{"N", "L1", "L2"};
    if (!rows.empty()) {
        for (const auto& f : rows.front().filtered) {
            head.push_back(f.label == "dh" ? "|||e|||_h" : "|||e|||_" + f.label.substr(1));
        }
    }
    auto cell = [](double v, const std::optional<double>& r) {
        return fmt("%.2e", v) + (r ? " (" + fmt("%.1f", *r) + ")" : "      ");
    };
    std::vector<std::vector<std::string>> body;
    for (const auto& r : rows) {
        std::vector<std::string> line{std::to_string(r.n_elems), cell(r.l1_error, r.l1_rate),
                                      cell(r.l2_error, r.l2_rate)};
        for (const auto& f : r.filtered) line.push_back(cell(f.value, f.rate));
        body.push_back(std::move(line));
    }
    std::vector<std::size_t> w(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        w[c] = head[c].size();
        for (const auto& l : body) w[c] = std::max(w[c], l[c].size());
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& l) {
        for (std::size_t c = 0; c < l.size(); ++c) {
            os << (c ? "  " : "") << l[c] << std::string(w[c] - l[c].size(), ' ');
        }
        os << '\n';
    };
    emit(head);
    for (const auto& l : body) emit(l);
    return os.str();
}

// ---------------------------------------------------------------------------
// single run

SingleRunResult run_single(const ExperimentConfig& config) {
    config.validate();
    const CaseData data = make_case(config);
    SolverConfig sc = config.solver_config(config.n_list.front());
    sc.record_estimator_terms = true;

    SingleRunResult out{solve(sc, data.u0), compute_constants(data.u0, sc.mesh, data.du0, sc.initial_projection), {}, {}};
    out.invariants = invariant_report(out.trajectory, out.constants, sc.viscosity.epsilon);
    if (out.trajectory.complete()) {
        const Mesh fine(config.reference_n());
        const NodalField u_init = reference_solution(data, 0.0, fine);
        for (const auto& d : config.delta_list) {
            const double delta = d.resolve(sc.mesh.h());
            out.estimator.emplace_back(d.label(),
                                       aposteriori_estimate(out.trajectory, u_init, out.constants, delta, sc.viscosity.nu));
        }
    }
    return out;
}

std::string final_state_csv(const Trajectory& traj) {
    std::ostringstream os;
    os << "x,u\n";
    const auto& u = traj.final_state;
    for (std::size_t i = 0; i < u.size(); ++i) {
        os << full(u.mesh().node(static_cast<std::ptrdiff_t>(i))) << ',' << full(u.values()[i]) << '\n';
    }
    return os.str();
}

std::string diagnostics_csv(const Trajectory& traj) {
    std::ostringstream os;
    os << "t,dt,max_u,max_slope,tv,energy\n";
    for (const auto& s : traj.steps) {
        os << full(s.t) << ',' << full(s.dt) << ',' << full(s.max_abs_u) << ',' << full(s.max_slope) << ','
           << full(s.tv) << ',' << full(s.energy) << '\n';
    }
    return os.str();
}

std::string estimator_csv(const std::vector<std::pair<std::string, EstimatorBreakdown>>& est) {
    std::ostringstream os;
    os << "delta,term,value\n";
    for (const auto& [label, e] : est) {
        const std::pair<const char*, double> rows[] = {
            {"term_initial", e.term_initial},   {"term_residual", e.term_residual},
            {"term_dtgrad", e.term_dtgrad},     {"term_artvisc", e.term_artvisc},
            {"term_jump", e.term_jump},         {"prefactor", e.prefactor},
            {"total", e.total},                 {"artvisc_weighted", e.artvisc_weighted},
            {"residual_jump_bound", e.residual_jump_bound},
        };
        for (const auto& [name, v] : rows) os << label << ',' << name << ',' << full(v) << '\n';
    }
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("failed writing '" + path + "'");
}

void write_single_outputs(const SingleRunResult& result, const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());
    const std::filesystem::path base(dir);
    write_text((base / "final_state.csv").string(), final_state_csv(result.trajectory));
    write_text((base / "diagnostics.csv").string(), diagnostics_csv(result.trajectory));
    write_text((base / "estimator.csv").string(), estimator_csv(result.estimator));
}

// ---------------------------------------------------------------------------
// checks

namespace {

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

ElementField random_viscosity(const Mesh& mesh, std::mt19937_64& rng) {
    const NodalField v = oracle::random_field(mesh, rng, 0.0, 0.1);
    return ElementField(mesh, std::vector<double>(v.values().begin(), v.values().end()));
}

bool oracle_checks(std::uint64_t seed, std::vector<std::string>& lines) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> nd(3, 40);
    double conv = 0.0, visc = 0.0, backend = 0.0, linear = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Mesh mesh(nd(rng));
        const NodalField u = oracle::random_field(mesh, rng);
        const ElementField nu = random_viscosity(mesh, rng);
        for (std::size_t i = 0; i < mesh.n_elems(); ++i) {
            const auto ii = static_cast<std::ptrdiff_t>(i);
            conv = std::max(conv, std::abs(convection_term(u, ii) - oracle::convection(u, ii)));
            visc = std::max(visc, std::abs(viscous_term(u, nu, ii) - oracle::viscous(u, nu, ii)));
        }
        ViscositySpec spec;
        spec.epsilon = trial % 2 ? mesh.h() : 0.0;
        const auto a = compute_viscosity(u, spec, Backend::Serial);
        const auto b = compute_viscosity(u, spec, Backend::OpenMP);
        const auto ra = compute_rhs(u, a, Backend::Serial);
        const auto rb = compute_rhs(u, b, Backend::OpenMP);
        for (std::size_t i = 0; i < mesh.n_elems(); ++i) {
            backend = std::max({backend, std::abs(a.values()[i] - b.values()[i]),
                                std::abs(ra.values()[i] - rb.values()[i])});
        }
        const NodalField v = oracle::random_field(mesh, rng);
        const HelmholtzFilter f(FilterSpec{0.3, mesh});
        NodalField comb(mesh);
        for (std::size_t i = 0; i < mesh.n_elems(); ++i) comb.at_node(i) = 2.0 * u.values()[i] - 3.0 * v.values()[i];
        const NodalField fc = f.apply(comb);
        const NodalField fu = f.apply(u);
        const NodalField fv = f.apply(v);
        for (std::size_t i = 0; i < mesh.n_elems(); ++i) {
            linear = std::max(linear, std::abs(fc.values()[i] - (2.0 * fu.values()[i] - 3.0 * fv.values()[i])));
        }
    }
    double solve_err = 0.0;
    std::uniform_int_distribution<std::size_t> sd(3, 12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = oracle::random_spd(sd(rng), rng);
        const NodalField r = oracle::random_field(Mesh(m.size()), rng);
        const std::vector<double> rhs(r.values().begin(), r.values().end());
        const auto x = cyclic_tridiag_solve(m, rhs);
        const auto y = oracle::dense_solve(m, rhs);
        for (std::size_t i = 0; i < x.size(); ++i) solve_err = std::max(solve_err, std::abs(x[i] - y[i]));
    }

    const std::pair<std::string, std::pair<double, double>> rows[] = {
        {"convection vs quadrature", {conv, 1e-13}},
        {"viscous vs quadrature", {visc, 1e-13}},
        {"cyclic solve vs dense", {solve_err, 1e-12}},
        {"filter linearity", {linear, 1e-12}},
        {"serial vs openmp kernels", {backend, 0.0}},
    };
    bool ok = true;
    for (const auto& [name, vt] : rows) {
        const bool pass = vt.first <= vt.second;
        ok = ok && pass;
        lines.push_back("[" + verdict(pass) + "] oracle " + name + ": max diff " + fmt("%.3e", vt.first) +
                        " (tol " + fmt("%.0e", vt.second) + ")");
    }
    return ok;
}

}  // namespace

ChecksResult run_checks(const ExperimentConfig& config) {
    config.validate();
    ChecksResult out;
    out.oracles_ok = oracle_checks(config.seed, out.lines);

    const CaseData data = make_case(config);
    std::vector<EpsilonSpec> eps_list;
    if (config.epsilon) {
        eps_list.push_back(*config.epsilon);
    } else {
        eps_list = {{EpsilonSpec::Mode::Zero, 0.0}, {EpsilonSpec::Mode::MeshSize, 0.0}};
    }
    const std::size_t n = config.n_list.front();

    // epsilon only enters the nonlinear viscosity, so the linear scheme runs once
    std::vector<std::pair<ViscosityKind, std::optional<EpsilonSpec>>> runs{{ViscosityKind::Linear, std::nullopt}};
    for (const auto& eps : eps_list) runs.emplace_back(ViscosityKind::Nonlinear, eps);

    for (const auto& [kind, eps] : runs) {
        {
            ExperimentConfig c = config;
            c.viscosity = kind;
            c.epsilon = eps;
            const SolverConfig sc = c.solver_config(n);
            const Trajectory traj = solve(sc, data.u0);
            const Constants k = compute_constants(data.u0, sc.mesh, data.du0, sc.initial_projection);
            const InvariantReport rep = invariant_report(traj, k, sc.viscosity.epsilon);
            const std::string tag = eps ? "nonlinear eps=" + eps->label() + " N=" + std::to_string(n)
                                        : "linear N=" + std::to_string(n);
            for (const auto& chk : rep.checks) {
                std::string line = "[" + std::string(!chk.checked ? "SKIP" : verdict(chk.passed())) + "] " + tag + " " +
                                   chk.name + ": margin " + fmt("%.3e", chk.worst_margin);
                if (chk.violations > 0) {
                    line += ", " + std::to_string(chk.violations) + " violation(s), first at step " +
                            std::to_string(*chk.first_violation);
                }
                if (!chk.note.empty()) line += " (" + chk.note + ")";
                out.lines.push_back(line);
                if (chk.passed()) continue;
                if (chk.name == "completed") {
                    out.solver_ok = false;
                } else {
                    out.invariants_ok = false;
                }
            }
        }
    }
    return out;
}

std::string run_reference(const ExperimentConfig& config, std::size_t n) {
    const CaseData data = make_case(config);
    const Mesh mesh(n);
    const NodalField r = reference_solution(data, config.t_final, mesh);
    std::ostringstream os;
    os << "x,u\n";
    for (std::size_t i = 0; i < r.size(); ++i) {
        os << full(mesh.node(static_cast<std::ptrdiff_t>(i))) << ',' << full(r.values()[i]) << '\n';
    }
    return os.str();
}

}  // namespace burgers
