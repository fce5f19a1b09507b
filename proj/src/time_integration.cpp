#include "burgers/time_integration.hpp"

#include <algorithm>
#include <cmath>

namespace burgers {

void SolverConfig::validate() const {
    if (!(t_final > 0.0) || !std::isfinite(t_final)) throw ConfigError("final time must be positive");
    if (!(cfl > 0.0) || !std::isfinite(cfl)) throw ConfigError("cfl must be positive");
    if (cfl > 1.0 && !allow_unstable_cfl) throw ConfigError("cfl must lie in (0, 1]");
    if (max_steps == 0) throw ConfigError("max_steps must be positive");
    ViscositySpec v = viscosity;
    v.u0_sup = 1.0;
    v.validate();
}

double cfl_dt(const NodalField& u, const ElementField& nu_hat, double cfl) noexcept {
    const double h = u.mesh().h();
    const double umax = std::max(1e-14, u.max_abs());
    const double numax = std::max(1e-14, nu_hat.max());
    return cfl * std::min(h / (2.0 * umax), h * h / (2.0 * numax));
}

namespace {

void check_finite(const NodalField& u, double t) {
    const auto v = u.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) throw StepFailure(i, t);
    }
}

// nu_first is nu_hat(u), already needed by the caller for dt
NodalField heun(const NodalField& u, const ElementField& nu_first, const ViscositySpec& spec, double dt,
                Backend backend, double t_start) {
    const NodalField k1 = compute_rhs(u, nu_first, backend);
    NodalField stage(u.mesh());
    for (std::size_t i = 0; i < u.size(); ++i) stage.at_node(i) = u.values()[i] + dt * k1.values()[i];
    check_finite(stage, t_start + dt);

    const NodalField k2 = compute_rhs(stage, compute_viscosity(stage, spec, backend), backend);
    NodalField out(u.mesh());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out.at_node(i) = 0.5 * u.values()[i] + 0.5 * (stage.values()[i] + dt * k2.values()[i]);
    }
    check_finite(out, t_start + dt);
    return out;
}

StepRecord diagnostics(const NodalField& u, double t, double dt) {
    return {t, dt, u.max_abs(), max_slope(u), total_variation(u), lumped_norm(u)};
}

EstimatorRecord integrands(const NodalField& u, const ElementField& nu_hat, double nu,
                           const CyclicTridiagonalFactor& mass) {
    EstimatorRecord r;
    r.residual = projection_residual_norm(u, mass);
    r.excess_visc = excess_viscosity_norm(u, nu_hat, nu);
    const double j = slope_jump_norm(u);
    r.jump_sq = j * j;
    r.conv_jump = convective_jump_norm(u);
    return r;
}

}  // namespace

NodalField step_ssprk2(const NodalField& u, const ViscositySpec& spec, double dt, Backend backend,
                       double t_start) {
    if (!(dt > 0.0)) throw ConfigError("time step must be positive");
    return heun(u, compute_viscosity(u, spec, backend), spec, dt, backend, t_start);
}

NodalField initial_state(const SolverConfig& config, const ScalarFunction& u0) {
    if (config.initial_projection == InitialProjection::NodalInterpolant) return interpolate(u0, config.mesh);
    return l2_project(u0, config.mesh);
}

Trajectory solve(const SolverConfig& config, const ScalarFunction& u0) {
    config.validate();
    return solve(config, initial_state(config, u0));
}

Trajectory solve(const SolverConfig& config, const NodalField& u_init) {
    config.validate();
    if (!(u_init.mesh() == config.mesh)) throw MeshMismatch("initial state is not on the solver mesh");

    Trajectory traj(config.mesh);
    traj.t_final = config.t_final;
    traj.viscosity = config.viscosity;
    const double u0 = u_init.max_abs();
    traj.viscosity.u0_sup = u0 > 0.0 ? u0 : 1.0;
    const ViscositySpec& spec = traj.viscosity;
    traj.initial = u_init;

    std::optional<CyclicTridiagonalFactor> mass;
    if (config.record_estimator_terms) mass.emplace(mass_matrix(config.mesh));

    NodalField u = u_init;
    ElementField nu_hat = compute_viscosity(u, spec, config.backend);
    traj.steps.push_back(diagnostics(u, 0.0, 0.0));
    if (mass) traj.estimator.push_back(integrands(u, nu_hat, spec.nu, *mass));
    traj.snapshots.push_back({0, 0.0, u, NodalField(config.mesh)});

    const double T = config.t_final;
    double t = 0.0;
    std::size_t step = 0;
    while (t < T) {
        if (step >= config.max_steps) {
            traj.failure = SolveFailure{step, t, "step limit reached before the final time"};
            break;
        }
        double dt = cfl_dt(u, nu_hat, config.cfl);
        bool last = false;
        if (t + dt >= T) {
            dt = T - t;
            last = true;
        }

        NodalField next(config.mesh);
        try {
            next = heun(u, nu_hat, spec, dt, config.backend, t);
        } catch (const StepFailure& f) {
            traj.failure = SolveFailure{step + 1, f.time(), f.what()};
            break;
        }
        ++step;
        t = last ? T : t + dt;

        NodalField inc(config.mesh);
        for (std::size_t i = 0; i < u.size(); ++i) inc.at_node(i) = (next.values()[i] - u.values()[i]) / dt;

        u = std::move(next);
        nu_hat = compute_viscosity(u, spec, config.backend);
        traj.steps.push_back(diagnostics(u, t, dt));
        if (mass) {
            EstimatorRecord r = integrands(u, nu_hat, spec.nu, *mass);
            r.dt_gradient = gradient_norm(inc);
            traj.estimator.push_back(r);
        }
        if (last || (config.record_every > 0 && step % config.record_every == 0)) {
            traj.snapshots.push_back({step, t, u, std::move(inc)});
        }
    }
    traj.final_state = u;
    return traj;
}

}  // namespace burgers
