#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burgers/analysis.hpp"
#include "burgers/reference.hpp"
#include "burgers/time_integration.hpp"

namespace burgers {

enum class CaseKind { Smooth, Nonsmooth, Custom };

/// epsilon as 0, the mesh size h, or a fixed number.
struct EpsilonSpec {
    enum class Mode { Zero, MeshSize, Literal } mode = Mode::Zero;
    double value = 0.0;

    double resolve(double h) const noexcept;
    std::string label() const;
};

/// Filter width: fixed, or the coarse mesh size.
struct DeltaSpec {
    bool mesh_size = false;
    double value = 1.0;

    double resolve(double h) const noexcept { return mesh_size ? h : value; }
    std::string label() const;
};

struct ExperimentConfig {
    CaseKind case_kind = CaseKind::Smooth;
    std::vector<std::pair<double, double>> knots;  ///< custom case, (position, value)
    ViscosityKind viscosity = ViscosityKind::Nonlinear;
    std::optional<EpsilonSpec> epsilon;  ///< unset means 0 (checks then sweep 0 and h)
    double nu = 0.0;
    double t_final = 0.5;
    double cfl = 0.25;
    std::vector<std::size_t> n_list{100, 200, 400, 800};
    std::vector<DeltaSpec> delta_list{{false, 1.0}, {true, 0.0}};
    std::optional<std::size_t> ref_n;
    Nu1Variant nu1_variant = Nu1Variant::Ratio;
    InitialProjection init_proj = InitialProjection::ConsistentL2;
    std::string out;
    std::uint64_t seed = 20240611;
    Backend backend = Backend::OpenMP;
    bool allow_unstable_cfl = false;

    /// 6400 for smooth data, 12800 otherwise, unless set.
    std::size_t reference_n() const noexcept;
    EpsilonSpec epsilon_or_zero() const noexcept { return epsilon.value_or(EpsilonSpec{}); }

    /// Throws ConfigError describing the first problem found.
    void validate() const;

    SolverConfig solver_config(std::size_t n) const;
};

// string forms shared by the CLI and the config file; all throw ConfigError
CaseKind parse_case(const std::string& s);
ViscosityKind parse_viscosity(const std::string& s);
EpsilonSpec parse_epsilon(const std::string& s);
std::vector<std::size_t> parse_n_list(const std::string& s);
std::vector<DeltaSpec> parse_delta_list(const std::string& s);
Nu1Variant parse_nu1_variant(const std::string& s);
InitialProjection parse_init_proj(const std::string& s);
Backend parse_backend(const std::string& s);
std::vector<std::pair<double, double>> parse_knots(const std::string& s);

/// Reads a JSON object whose keys mirror the command-line flags
/// (case, knots, viscosity, eps, nu, t_final, cfl, n_list, delta_list,
/// ref_n, nu1_variant, init_proj, out, seed, backend). Unknown keys are errors.
ExperimentConfig load_config_file(const std::string& path);
void apply_config_json(ExperimentConfig& config, const std::string& json_text);

/// Initial data and exact solution of the configured case.
struct CaseData {
    ScalarFunction u0;
    ScalarFunction du0;                ///< may be empty
    std::optional<PwLinearExact> pw;   ///< set for piecewise-linear data
};

CaseData make_case(const ExperimentConfig& config);
NodalField reference_solution(const CaseData& data, double t, const Mesh& fine);

struct ConvergenceResult {
    std::vector<ErrorReport> rows;  ///< ordered by N; failed solves are omitted
    std::vector<std::pair<std::size_t, std::string>> failures;  ///< (N, message)

    bool ok() const noexcept { return failures.empty(); }
};

/// Independent solves per N, run concurrently.
ConvergenceResult run_convergence(const ExperimentConfig& config);

std::string convergence_csv(const std::vector<ErrorReport>& rows);
std::string render_table(const std::vector<ErrorReport>& rows);

struct SingleRunResult {
    Trajectory trajectory;
    Constants constants;
    InvariantReport invariants;
    std::vector<std::pair<std::string, EstimatorBreakdown>> estimator;  ///< per delta label
};

/// One solve at n_list.front().
SingleRunResult run_single(const ExperimentConfig& config);

std::string final_state_csv(const Trajectory& traj);
std::string diagnostics_csv(const Trajectory& traj);
std::string estimator_csv(const std::vector<std::pair<std::string, EstimatorBreakdown>>& est);

/// Writes final_state.csv, diagnostics.csv and estimator.csv into dir.
void write_single_outputs(const SingleRunResult& result, const std::string& dir);

struct ChecksResult {
    std::vector<std::string> lines;
    bool invariants_ok = true;
    bool oracles_ok = true;
    bool solver_ok = true;

    bool ok() const noexcept { return invariants_ok && oracles_ok && solver_ok; }
};

/// Invariant suite over both viscosity kinds (and epsilon in {0, h} unless
/// one is configured) at n_list.front(), plus the kernel oracles.
ChecksResult run_checks(const ExperimentConfig& config);

/// Samples of the exact solution at t_final on n nodes: "x,u" CSV.
std::string run_reference(const ExperimentConfig& config, std::size_t n);

/// Writes text to path, or to stdout when path is empty. Throws IoError.
void write_text(const std::string& path, const std::string& text);

}  // namespace burgers
