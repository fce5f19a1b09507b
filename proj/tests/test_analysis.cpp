#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "burgers/analysis.hpp"
#include "burgers/oracles.hpp"
#include "burgers/reference.hpp"

using namespace burgers;

namespace {

constexpr double pi = std::numbers::pi;

ScalarFunction half_cos() {
    return [](double x) { return 0.5 * (std::cos(2 * pi * x) + 1.0); };
}

Trajectory smooth_run(std::size_t n, ViscosityKind kind, bool estimator) {
    SolverConfig cfg;
    cfg.mesh = Mesh(n);
    cfg.viscosity.kind = kind;
    cfg.record_estimator_terms = estimator;
    return solve(cfg, smooth_default());
}

}  // namespace

TEST_CASE("constants of the initial data") {
    const auto c = compute_constants([](double) { return -0.3; }, Mesh(50));
    CHECK(c.u0_sup == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(std::abs(c.d0) < 1e-8);

    // sup u0' = pi for this profile, attained at x = 3/4
    const auto k = compute_constants(half_cos(), Mesh(100));
    CHECK(k.u0_sup == doctest::Approx(1.0).epsilon(0.01));
    CHECK(k.d0 == doctest::Approx(pi).epsilon(0.01));

    const auto d = compute_constants(smooth_default(), Mesh(100), smooth_default_derivative);
    CHECK(d.d0 == doctest::Approx(pi / 2).epsilon(0.01));

    // the sup is sampled, so the error is not monotone from one level to the next
    const double coarse = std::abs(compute_constants(half_cos(), Mesh(10)).d0 - pi);
    const double fine = std::abs(compute_constants(half_cos(), Mesh(400)).d0 - pi);
    CHECK(fine < coarse);
    CHECK(fine < 2e-3);
    CHECK(std::abs(compute_constants(half_cos(), Mesh(400)).u0_sup - 1.0) < 1e-4);
}

TEST_CASE("error norms") {
    const Mesh fine(400);
    std::mt19937_64 rng(2);
    const auto r = oracle::random_field(fine, rng);
    const auto zero = error_norms(r, r);
    CHECK(zero.l1 == 0.0);
    CHECK(zero.l2 == 0.0);

    const auto c = error_norms(NodalField(Mesh(100), 0.0), NodalField(fine, -0.25));
    CHECK(c.l1 == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(c.l2 == doctest::Approx(0.25).epsilon(1e-14));

    const auto s = interpolate([](double x) { return std::sin(2 * pi * x); }, Mesh(6400));
    const auto n = error_norms(NodalField(Mesh(100), 0.0), s);
    CHECK(std::abs(n.l1 - 2 / pi) < 1e-4);
    CHECK(std::abs(n.l2 - std::sqrt(0.5)) < 1e-4);

    CHECK_THROWS_AS(error_norms(NodalField(Mesh(3), 0.0), NodalField(Mesh(100), 0.0)), MeshMismatch);
}

TEST_CASE("pw linear norms are exact") {
    // values +1, -1 alternating: |e| is a tent pair on every element
    const NodalField e(Mesh(4), {1, -1, 1, -1});
    const auto n = pw_linear_norms(e);
    CHECK(n.l1 == doctest::Approx(0.5));
    CHECK(n.l2 == doctest::Approx(std::sqrt(1.0 / 3.0)));
}

TEST_CASE("rates") {
    CHECK(*rate_of(4, 1) == doctest::Approx(2.0));
    CHECK(*rate_of(0.036, 0.018) == doctest::Approx(1.0));
    CHECK(*rate_of(0.071, 0.049) == doctest::Approx(0.535).epsilon(0.01));
    CHECK_FALSE(rate_of(0.0, 1.0).has_value());
    CHECK_FALSE(rate_of(1.0, 0.0).has_value());

    std::vector<ErrorReport> rows(3);
    for (std::size_t i = 0; i < 3; ++i) {
        rows[i].n_elems = 100u << i;
        rows[i].l1_error = 0.036 / std::pow(2.0, static_cast<double>(i));
        rows[i].l2_error = 1.0;
        rows[i].filtered.push_back({"d1", 1.0, 0.0, std::nullopt});
    }
    const auto out = convergence_rates(rows);
    CHECK_FALSE(out[0].l1_rate.has_value());
    CHECK(*out[2].l1_rate == doctest::Approx(1.0));
    CHECK(*out[1].l2_rate == doctest::Approx(0.0));
    CHECK_FALSE(out[1].filtered[0].rate.has_value());

    rows[2].n_elems = 300;
    CHECK_THROWS_AS(convergence_rates(rows), ConfigError);
}

TEST_CASE("estimator") {
    SolverConfig cfg;
    cfg.mesh = Mesh(40);
    cfg.record_estimator_terms = true;
    cfg.t_final = 0.2;
    const auto flat = solve(cfg, [](double) { return 0.4; });
    const Constants k0{0.4, 0.0};
    const auto ref0 = NodalField(Mesh(160), 0.4 + 1e-3);
    const auto e = aposteriori_estimate(flat, ref0, k0, 1.0, 0.0);
    // zero up to the round-off of the projected constant
    CHECK(std::abs(e.term_residual) < 1e-15);
    CHECK(std::abs(e.term_dtgrad) < 1e-15);
    CHECK(std::abs(e.term_artvisc) < 1e-15);
    CHECK(e.term_jump == 0.0);
    CHECK(e.term_initial > 1e-5);
    CHECK(e.total == doctest::Approx(e.prefactor * e.term_initial).epsilon(1e-9));

    auto estimate = [](std::size_t n) {
        const auto traj = smooth_run(n, ViscosityKind::Linear, true);
        const auto k = compute_constants(smooth_default(), traj.mesh(), smooth_default_derivative);
        const auto ref = interpolate(smooth_default(), Mesh(6400));
        return aposteriori_estimate(traj, ref, k, 1.0, 0.0);
    };
    const auto a = estimate(100), b = estimate(200);
    CHECK(a.term_jump == 0.0);
    CHECK(a.total / b.total >= std::pow(2.0, 0.4));

    const auto no_terms = smooth_run(50, ViscosityKind::Nonlinear, false);
    CHECK_THROWS_AS(aposteriori_estimate(no_terms, NodalField(Mesh(100), 0.0), k0, 1.0, 0.0), ConfigError);
}

TEST_CASE("invariant report") {
    for (auto kind : {ViscosityKind::Linear, ViscosityKind::Nonlinear}) {
        const auto traj = smooth_run(100, kind, false);
        const auto k = compute_constants(smooth_default(), traj.mesh(), smooth_default_derivative);
        const auto rep = invariant_report(traj, k, 0.0);
        CHECK(rep.passed());
        for (const auto& c : rep.checks) {
            CHECK(c.violations == 0);
            CHECK(c.worst_margin >= 0.0);
        }
    }

    auto traj = smooth_run(100, ViscosityKind::Nonlinear, false);
    const auto k = compute_constants(smooth_default(), traj.mesh(), smooth_default_derivative);
    // the state at step 37 scaled by 1.1
    auto& r = traj.steps.at(37);
    r.max_abs_u *= 1.1;
    r.max_slope *= 1.1;
    r.tv *= 1.1;
    r.energy *= 1.1;
    const auto bad = invariant_report(traj, k, 0.0);
    CHECK_FALSE(bad.passed());
    const auto* umax = bad.find("max_abs_u");
    REQUIRE(umax != nullptr);
    CHECK(umax->violations == 1);
    CHECK(umax->first_violation == 37u);
    CHECK(bad.find("total_variation")->first_violation == 37u);

    SolverConfig cfg;
    cfg.mesh = Mesh(200);
    cfg.viscosity.epsilon = cfg.mesh.h();
    const auto pert = solve(cfg, smooth_default());
    const auto kp = compute_constants(smooth_default(), cfg.mesh, smooth_default_derivative);
    const auto rp = invariant_report(pert, kp, cfg.viscosity.epsilon);
    CHECK(rp.find("max_abs_u")->checked);
    CHECK(rp.find("max_abs_u")->passed());
    CHECK_FALSE(rp.find("total_variation")->checked);

    const auto gated = invariant_report(pert, kp, 4.0);
    CHECK_FALSE(gated.find("max_abs_u")->checked);
    CHECK_FALSE(gated.find("max_slope")->checked);
}
