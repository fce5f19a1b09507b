#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burgers/assembly.hpp"
#include "burgers/kernels.hpp"
#include "burgers/residuals.hpp"
#include "burgers/viscosity.hpp"

namespace burgers {

enum class InitialProjection { ConsistentL2, NodalInterpolant };

struct SolverConfig {
    Mesh mesh{100};
    ViscositySpec viscosity{};  ///< u0_sup is overwritten by solve() from u_h(0)
    double t_final = 0.5;
    double cfl = 0.25;
    InitialProjection initial_projection = InitialProjection::ConsistentL2;
    /// Snapshot stride in steps; 0 keeps only the initial and final states.
    std::size_t record_every = 0;
    bool record_estimator_terms = false;
    Backend backend = Backend::OpenMP;
    std::size_t max_steps = 10'000'000;
    /// Lets cfl exceed 1. Only meant for deliberately unstable control runs.
    bool allow_unstable_cfl = false;

    /// Throws ConfigError on T <= 0 or cfl outside (0, 1].
    void validate() const;
};

/// Diagnostics of the state reached at time t (t = 0, dt = 0 for the first).
struct StepRecord {
    double t = 0.0;
    double dt = 0.0;
    double max_abs_u = 0.0;
    double max_slope = 0.0;
    double tv = 0.0;
    double energy = 0.0;  ///< lumped norm
};

struct Snapshot {
    std::size_t step;
    double t;
    NodalField state;
    NodalField increment;  ///< (u^{n+1} - u^n)/dt of the step ending here; zero at t = 0
};

struct SolveFailure {
    std::size_t step;
    double t;
    std::string message;
};

struct Trajectory {
    explicit Trajectory(const Mesh& mesh) : initial(mesh), final_state(mesh) {}

    ViscositySpec viscosity;  ///< as used, with the computed U0
    double t_final = 0.0;
    NodalField initial;
    NodalField final_state;
    std::vector<StepRecord> steps;
    std::vector<EstimatorRecord> estimator;  ///< aligned with steps when recorded
    std::vector<Snapshot> snapshots;
    std::optional<SolveFailure> failure;

    const Mesh& mesh() const noexcept { return initial.mesh(); }
    double u0_sup() const noexcept { return viscosity.u0_sup; }
    bool complete() const noexcept { return !failure && !steps.empty() && steps.back().t == t_final; }
};

/// cfl * min(h / (2 max|u|), h^2 / (2 max nu_hat)), both maxima floored at 1e-14.
double cfl_dt(const NodalField& u, const ElementField& nu_hat, double cfl) noexcept;

/// Two-stage SSP Runge-Kutta step with viscosity rebuilt from each stage state.
/// Throws StepFailure naming the first non-finite node; t_start only labels it.
NodalField step_ssprk2(const NodalField& u, const ViscositySpec& spec, double dt,
                       Backend backend = Backend::OpenMP, double t_start = 0.0);

/// Initial state per config.initial_projection.
NodalField initial_state(const SolverConfig& config, const ScalarFunction& u0);

/// Advance to config.t_final. A failing step ends the run early and is stored
/// in Trajectory::failure together with everything recorded before it.
Trajectory solve(const SolverConfig& config, const ScalarFunction& u0);
Trajectory solve(const SolverConfig& config, const NodalField& u_init);

}  // namespace burgers
