#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burgers/assembly.hpp"
#include "burgers/time_integration.hpp"

namespace burgers {

struct Constants {
    double u0_sup;  ///< U0 = sup |pi_h u0|
    double d0;      ///< D0 = sup (u0' + d/dx pi_h u0) / 2
};

/// Samples 16 points per element. Without a derivative, u0' is taken by
/// central differences.
Constants compute_constants(const ScalarFunction& u0, const Mesh& mesh,
                            const ScalarFunction& derivative = nullptr,
                            InitialProjection projection = InitialProjection::ConsistentL2);

struct NormPair {
    double l1;
    double l2;
};

/// L1 and L2 integrals of a piecewise-linear field, exact.
NormPair pw_linear_norms(const NodalField& e) noexcept;

/// ||u_ref - u_h|| with u_h injected at the fine nodes. Throws MeshMismatch
/// unless the meshes nest.
NormPair error_norms(const NodalField& u_h, const NodalField& u_ref);

struct FilteredError {
    std::string label;  ///< "d1", "dh" or "d<delta>"
    double delta;
    double value;
    std::optional<double> rate;
};

struct ErrorReport {
    std::size_t n_elems = 0;
    double l1_error = 0.0;
    double l2_error = 0.0;
    std::optional<double> l1_rate;
    std::optional<double> l2_rate;
    std::vector<FilteredError> filtered;
};

/// log2 of successive error ratios. Rows must double in N; a zero error
/// leaves the rate empty.
std::vector<ErrorReport> convergence_rates(std::vector<ErrorReport> reports);

/// log2(previous/current), empty when either is not positive.
std::optional<double> rate_of(double previous, double current) noexcept;

struct EstimatorBreakdown {
    double term_initial = 0.0;
    double term_residual = 0.0;
    double term_dtgrad = 0.0;
    double term_artvisc = 0.0;
    double term_jump = 0.0;
    double prefactor = 0.0;
    double total = 0.0;

    // reported alongside, not part of the total
    double artvisc_weighted = 0.0;  ///< U0^{1/2} * term_artvisc
    double residual_jump_bound = 0.0;  ///< h int ||[u u']||_N dt
};

/// Throws ConfigError if the trajectory is incomplete or was run without
/// record_estimator_terms.
EstimatorBreakdown aposteriori_estimate(const Trajectory& traj, const NodalField& u_ref_initial,
                                        const Constants& constants, double delta, double nu);

struct CheckResult {
    std::string name;
    bool checked = true;   ///< false when a precondition gate skipped it
    std::size_t violations = 0;
    std::optional<std::size_t> first_violation;  ///< step index
    double worst_margin = 0.0;  ///< bound minus value, negative on violation
    std::string note;

    bool passed() const noexcept { return !checked || violations == 0; }
};

struct InvariantReport {
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    const CheckResult* find(const std::string& name) const noexcept;
};

/// Discrete maximum principle, slope bound, TV and energy along a trajectory.
/// For epsilon > 0 the perturbed bounds apply while epsilon T < 1 and the TV
/// check is informational.
InvariantReport invariant_report(const Trajectory& traj, const Constants& constants, double epsilon);

}  // namespace burgers
