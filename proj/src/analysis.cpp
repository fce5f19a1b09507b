#include "burgers/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace burgers {

Constants compute_constants(const ScalarFunction& u0, const Mesh& mesh, const ScalarFunction& derivative,
                            InitialProjection projection) {
    const NodalField p = projection == InitialProjection::ConsistentL2 ? l2_project(u0, mesh) : interpolate(u0, mesh);
    const double h = mesh.h();
    constexpr int kSamples = 16;
    constexpr double kStep = 1e-7;

    double u_sup = 0.0;
    double d0 = -std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < mesh.n_elems(); ++e) {
        const auto ei = static_cast<std::ptrdiff_t>(e);
        const double s = element_slope(p, ei);
        const double x0 = mesh.node(ei);
        for (int k = 0; k < kSamples; ++k) {
            // midpoints of sub-cells keep kinks of the data at nodes out of the difference quotient
            const double theta = (k + 0.5) / kSamples;
            const double x = x0 + theta * h;
            const double ph = (1.0 - theta) * p[ei] + theta * p[ei + 1];
            u_sup = std::max(u_sup, std::abs(ph));
            const double du = derivative ? derivative(x) : (u0(x + kStep) - u0(x - kStep)) / (2.0 * kStep);
            d0 = std::max(d0, 0.5 * (du + s));
        }
    }
    u_sup = std::max(u_sup, p.max_abs());
    return {u_sup, d0};
}

NormPair pw_linear_norms(const NodalField& e) noexcept {
    const double h = e.mesh().h();
    const auto n = static_cast<std::ptrdiff_t>(e.size());
    double l1 = 0.0;
    double l2 = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double a = e[i];
        const double b = e[i + 1];
        l2 += (h / 3.0) * (a * a + a * b + b * b);
        const double sa = std::abs(a);
        const double sb = std::abs(b);
        if (a * b >= 0.0) {
            l1 += 0.5 * h * (sa + sb);
        } else {
            l1 += 0.5 * h * (a * a + b * b) / (sa + sb);
        }
    }
    return {l1, std::sqrt(l2)};
}

NormPair error_norms(const NodalField& u_h, const NodalField& u_ref) {
    const NodalField injected = prolongate(u_h, u_ref.mesh());
    NodalField e(u_ref.mesh());
    for (std::size_t i = 0; i < e.size(); ++i) e.at_node(i) = u_ref.values()[i] - injected.values()[i];
    return pw_linear_norms(e);
}

std::optional<double> rate_of(double previous, double current) noexcept {
    if (!(previous > 0.0) || !(current > 0.0)) return std::nullopt;
    return std::log2(previous / current);
}

std::vector<ErrorReport> convergence_rates(std::vector<ErrorReport> reports) {
    for (std::size_t k = 0; k < reports.size(); ++k) {
        ErrorReport& r = reports[k];
        r.l1_rate.reset();
        r.l2_rate.reset();
        for (auto& f : r.filtered) f.rate.reset();
        if (k == 0) continue;
        const ErrorReport& p = reports[k - 1];
        if (r.n_elems != 2 * p.n_elems) {
            throw ConfigError("rates need N to double between rows, got " + std::to_string(p.n_elems) + " then " +
                              std::to_string(r.n_elems));
        }
        if (r.filtered.size() != p.filtered.size()) throw ConfigError("rows carry different filtered columns");
        r.l1_rate = rate_of(p.l1_error, r.l1_error);
        r.l2_rate = rate_of(p.l2_error, r.l2_error);
        for (std::size_t j = 0; j < r.filtered.size(); ++j) {
            r.filtered[j].rate = rate_of(p.filtered[j].value, r.filtered[j].value);
        }
    }
    return reports;
}

EstimatorBreakdown aposteriori_estimate(const Trajectory& traj, const NodalField& u_ref_initial,
                                        const Constants& constants, double delta, double nu) {
    if (!traj.complete()) throw ConfigError("estimator needs a trajectory that reached the final time");
    if (traj.estimator.size() != traj.steps.size()) {
        throw ConfigError("trajectory has no time increments; run with estimator recording enabled");
    }
    if (!(delta > 0.0)) throw ConfigError("filter width must be positive");

    const double h = traj.mesh().h();
    double res = 0.0, dtg = 0.0, visc = 0.0, jump = 0.0, conv = 0.0;
    for (std::size_t k = 1; k < traj.steps.size(); ++k) {
        const double dt = traj.steps[k].dt;
        const EstimatorRecord& a = traj.estimator[k - 1];
        const EstimatorRecord& b = traj.estimator[k];
        res += 0.5 * dt * (a.residual + b.residual);
        visc += 0.5 * dt * (a.excess_visc + b.excess_visc);
        jump += 0.5 * dt * nu * (a.jump_sq + b.jump_sq);
        conv += 0.5 * dt * (a.conv_jump + b.conv_jump);
        dtg += dt * b.dt_gradient;
    }

    EstimatorBreakdown out;
    out.term_initial = std::sqrt(h) * error_norms(traj.initial, u_ref_initial).l2;
    out.term_residual = std::sqrt(h) * res;
    out.term_dtgrad = h * std::sqrt(h) * dtg;
    out.term_artvisc = visc;
    out.term_jump = h * std::sqrt(jump);
    out.prefactor = std::exp(constants.d0 * traj.t_final) * std::sqrt(h / (delta * delta));
    out.total = out.prefactor *
                (out.term_initial + out.term_residual + out.term_dtgrad + out.term_artvisc + out.term_jump);
    out.artvisc_weighted = std::sqrt(constants.u0_sup) * out.term_artvisc;
    out.residual_jump_bound = h * conv;
    return out;
}

bool InvariantReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* InvariantReport::find(const std::string& name) const noexcept {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

void record(CheckResult& c, std::size_t step, double margin) {
    c.worst_margin = std::min(c.worst_margin, margin);
    if (margin < 0.0) {
        if (!c.first_violation) c.first_violation = step;
        ++c.violations;
    }
}

CheckResult fresh(const std::string& name) {
    CheckResult c;
    c.name = name;
    c.worst_margin = std::numeric_limits<double>::infinity();
    return c;
}

}  // namespace

InvariantReport invariant_report(const Trajectory& traj, const Constants& constants, double epsilon) {
    InvariantReport report;
    const auto& st = traj.steps;
    const double U0 = constants.u0_sup;
    const double T = traj.t_final;
    const bool perturbed = epsilon > 0.0;
    const bool gate_open = !perturbed || epsilon * T < 1.0;

    CheckResult completed = fresh("completed");
    completed.worst_margin = 0.0;
    if (traj.failure) {
        completed.violations = 1;
        completed.first_violation = traj.failure->step;
        completed.note = traj.failure->message;
    }
    report.checks.push_back(completed);

    CheckResult umax = fresh("max_abs_u");
    CheckResult slope = fresh("max_slope");
    CheckResult tv = fresh("total_variation");
    CheckResult energy = fresh("energy_step");
    CheckResult energy_total = fresh("energy_total");

    if (!gate_open) {
        const std::string note = "skipped: epsilon*T = " + std::to_string(epsilon * T) + " >= 1";
        umax.checked = false;
        umax.note = note;
        slope.checked = false;
        slope.note = note;
    }
    if (perturbed) {
        tv.checked = false;
        tv.note = "informational: epsilon > 0";
    }

    for (std::size_t k = 0; k < st.size(); ++k) {
        const StepRecord& r = st[k];
        const double et = epsilon * r.t;
        if (umax.checked) {
            const double bound = perturbed ? (1.0 + et) * U0 + 1e-8 : U0 * (1.0 + 1e-10);
            record(umax, k, bound - r.max_abs_u);
        }
        if (k == 0) continue;
        const StepRecord& p = st[k - 1];
        if (slope.checked) {
            const double bound = perturbed ? st[0].max_slope + U0 * (1.0 + et) * et + 1e-8
                                           : p.max_slope + 1e-8;
            record(slope, k, bound - r.max_slope);
        }
        record(tv, k, p.tv + 1e-8 - r.tv);
        record(energy, k, p.energy * (1.0 + 10.0 * r.dt * r.dt) - r.energy);
    }
    if (!st.empty()) {
        record(energy_total, st.size() - 1, st.front().energy * (1.0 + 1e-14) - st.back().energy);
    }

    for (CheckResult* c : {&umax, &slope, &tv, &energy, &energy_total}) {
        if (!std::isfinite(c->worst_margin)) c->worst_margin = 0.0;
        report.checks.push_back(*c);
    }
    return report;
}

}  // namespace burgers
