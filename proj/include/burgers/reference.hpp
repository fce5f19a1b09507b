#pragma once

#include <vector>

#include "burgers/assembly.hpp"
#include "burgers/mesh.hpp"

namespace burgers {

struct Breakpoint {
    double position;  ///< in [0, 1)
    double value_left;
    double value_right;
    bool is_shock;
};

/// Periodic piecewise-linear profile: linear between consecutive breakpoints,
/// from value_right of one to value_left of the next (wrapping past 1).
struct PwLinearExact {
    std::vector<Breakpoint> breakpoints;
    double time = 0.0;

    /// Continuous data from knots (position, value); positions in [0,1), increasing.
    static PwLinearExact from_knots(const std::vector<std::pair<double, double>>& knots);

    /// Throws ReferenceError when positions are unordered or out of range,
    /// a shock violates value_left > value_right, or a non-shock jumps.
    void validate() const;

    /// Value at x (1-periodic). Within 1e-12 of a shock, the mean of both states.
    double evaluate(double x) const noexcept;
    double operator()(double x) const noexcept { return evaluate(x); }

    /// Exact integral over one period.
    double integral() const noexcept;

    /// Largest segment slope.
    double max_slope() const noexcept;
    double max_value() const noexcept;
    double min_value() const noexcept;

    std::size_t shock_count() const noexcept;
};

/// Earliest time a segment steepens into a shock, 1/max(-slope);
/// +inf if no segment decreases.
double shock_formation_time(const PwLinearExact& initial);

/// Root of u = u0(x - u t) by (damped) fixed-point iteration with a bisection
/// fallback; |residual| <= tol on return. Throws ReferenceError when the
/// characteristics through x already cross (several roots) or nothing converges.
double characteristics_fixed_point(const ScalarFunction& u0, double x, double t, double tol);

/// Exact entropy solution at time t of piecewise-linear periodic data.
PwLinearExact front_tracking_solve(const PwLinearExact& initial, double t);

/// Smooth initial data and the sample time (pre-shock).
struct SmoothReference {
    ScalarFunction u0;
    double time;
};

NodalField sample_reference(const PwLinearExact& ref, const Mesh& fine);
NodalField sample_reference(const SmoothReference& ref, const Mesh& fine, double tol = 1e-14);

/// 0.25 (cos 2 pi x + 1); shocks first at t = 2/pi.
ScalarFunction smooth_default();
double smooth_default_derivative(double x);

/// Triangle wave rising with slope 4/3 on [0, 3/4], falling with slope -4.
PwLinearExact nonsmooth_default();

}  // namespace burgers
