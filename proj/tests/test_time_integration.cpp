#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "burgers/oracles.hpp"
#include "burgers/reference.hpp"
#include "burgers/time_integration.hpp"

using namespace burgers;

namespace {

// independent scalar SSPRK2 for the linear viscosity: plain loops, no library kernels
std::vector<double> ssprk2_scalar(const std::vector<double>& u, double h, double nu_lin, double dt) {
    const std::size_t n = u.size();
    auto L = [&](const std::vector<double>& v) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double um = v[(i + n - 1) % n], ui = v[i], up = v[(i + 1) % n];
            const double s1 = (ui - um) / h, s2 = (up - ui) / h;
            const double conv = h * h / 3 * s1 * s1 + h * h / 6 * s2 * s2 + h / 2 * um * s1 + h / 2 * ui * s2;
            const double visc = nu_lin * s1 - nu_lin * s2;
            out[i] = -(conv + visc) / h;
        }
        return out;
    };
    const auto k1 = L(u);
    std::vector<double> us(n);
    for (std::size_t i = 0; i < n; ++i) us[i] = u[i] + dt * k1[i];
    const auto k2 = L(us);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = 0.5 * u[i] + 0.5 * (us[i] + dt * k2[i]);
    return r;
}

}  // namespace

TEST_CASE("cfl time step") {
    const Mesh m(100);
    const NodalField u(m, 1.0);
    CHECK(cfl_dt(u, ElementField(m, m.h() / 2), 0.25) == doctest::Approx(0.00125).epsilon(1e-14));

    const double big = cfl_dt(NodalField(m, 0.0), ElementField(m, 0.0), 0.25);
    CHECK(std::isfinite(big));
    CHECK(big > 1e6);

    // refinement at most halves the step on the smooth state
    ViscositySpec spec;
    auto dt_at = [&](std::size_t n) {
        const Mesh mm(n);
        const auto v = interpolate(smooth_default(), mm);
        return cfl_dt(v, nonlinear_viscosity(v, spec), 0.25);
    };
    CHECK(dt_at(200) <= dt_at(100) / 2 * (1 + 1e-12));
    CHECK(dt_at(200) >= dt_at(100) / 4 * (1 - 1e-12));
}

TEST_CASE("one step") {
    ViscositySpec spec;
    const NodalField c(Mesh(9), 0.3);
    const auto same = step_ssprk2(c, spec, 0.01);
    for (double v : same.values()) CHECK(v == doctest::Approx(0.3).epsilon(1e-15));

    const Mesh m8(8);
    const auto u = interpolate(smooth_default(), m8);
    ViscositySpec lin{ViscosityKind::Linear, 0.0, 0.0, Nu1Variant::Ratio, u.max_abs()};
    const double nu_lin = u.max_abs() * m8.h() / 2;
    const auto got = step_ssprk2(u, lin, 0.01, Backend::Serial);
    const auto want = ssprk2_scalar(std::vector<double>(u.values().begin(), u.values().end()), m8.h(), nu_lin, 0.01);
    for (std::size_t i = 0; i < 8; ++i) CHECK(got.values()[i] == doctest::Approx(want[i]).epsilon(1e-14));
}

TEST_CASE("the step is consistent with the semidiscrete operator") {
    const Mesh m(50);
    const auto u = interpolate(smooth_default(), m);
    ViscositySpec spec;
    const auto L = semidiscrete_rhs(u, nonlinear_viscosity(u, spec));
    auto err = [&](double dt) {
        const auto v = step_ssprk2(u, spec, dt);
        double e = 0.0;
        for (std::size_t i = 0; i < 50; ++i) e = std::max(e, std::abs((v.values()[i] - u.values()[i]) / dt - L.values()[i]));
        return e;
    };
    const double e1 = err(1e-3), e2 = err(5e-4);
    CHECK(e2 < e1);
    CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("non-finite states are reported with the node") {
    NodalField u(Mesh(10), 0.1);
    u.at_node(6) = std::numeric_limits<double>::quiet_NaN();
    ViscositySpec spec;
    try {
        (void)step_ssprk2(u, spec, 0.001, Backend::Serial, 0.25);
        FAIL("expected StepFailure");
    } catch (const StepFailure& e) {
        CHECK(e.node() < 10);
    }
}

TEST_CASE("solve") {
    SolverConfig cfg;
    cfg.mesh = Mesh(50);
    cfg.t_final = 1e-6;
    const auto short_run = solve(cfg, smooth_default());
    CHECK(short_run.complete());
    CHECK(short_run.steps.size() == 2);
    CHECK(short_run.steps.back().t == 1e-6);
    CHECK(short_run.steps.back().dt == doctest::Approx(1e-6));

    cfg.t_final = 0.5;
    cfg.record_every = 10;
    cfg.record_estimator_terms = true;
    const auto run = solve(cfg, smooth_default());
    CHECK(run.complete());
    CHECK(run.estimator.size() == run.steps.size());
    CHECK(run.snapshots.size() >= 2);
    CHECK(run.u0_sup() == doctest::Approx(run.initial.max_abs()));
    double t = 0.0;
    for (std::size_t k = 1; k < run.steps.size(); ++k) {
        t += run.steps[k].dt;
        CHECK(run.steps[k].t > run.steps[k - 1].t);
    }
    CHECK(t == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("solver configuration") {
    SolverConfig cfg;
    cfg.cfl = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.allow_unstable_cfl = true;
    CHECK_NOTHROW(cfg.validate());
    cfg.cfl = 0.2;
    cfg.t_final = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("blow-up is recorded, not thrown") {
    SolverConfig cfg;
    cfg.mesh = Mesh(100);
    cfg.cfl = 5.0;
    cfg.allow_unstable_cfl = true;
    const auto run = solve(cfg, smooth_default());
    CHECK_FALSE(run.complete());
    REQUIRE(run.failure.has_value());
    CHECK(run.failure->step > 0);
    CHECK(run.steps.size() >= 1);
}

TEST_CASE("initial projection") {
    SolverConfig cfg;
    cfg.mesh = Mesh(20);
    cfg.initial_projection = InitialProjection::NodalInterpolant;
    const auto a = initial_state(cfg, smooth_default());
    for (std::size_t i = 0; i < 20; ++i) CHECK(a.values()[i] == smooth_default()(cfg.mesh.node(static_cast<std::ptrdiff_t>(i))));
    cfg.initial_projection = InitialProjection::ConsistentL2;
    const auto b = initial_state(cfg, smooth_default());
    CHECK(b.values()[0] != a.values()[0]);
}
