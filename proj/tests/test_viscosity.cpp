#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "burgers/oracles.hpp"
#include "burgers/viscosity.hpp"

using namespace burgers;

namespace {

ViscositySpec linear_spec(double u0, double nu) { return {ViscosityKind::Linear, nu, 0.0, Nu1Variant::Ratio, u0}; }

// the nu_0 definition written out independently from slopes
double nu0_brute(const NodalField& u, int i, double eps) {
    const double h = u.mesh().h();
    auto q = [&](int node) {
        const double sl = (u[node] - u[node - 1]) / h;
        const double sr = (u[node + 1] - u[node]) / h;
        const double num = std::abs(sr - sl);
        const double den = std::abs(sl) + std::abs(sr) + eps;
        return den == 0.0 ? 0.0 : num / den;
    };
    return 0.5 * std::max(std::abs(u[i]), std::abs(u[i + 1])) * std::max(q(i), q(i + 1));
}

}  // namespace

TEST_CASE("linear viscosity") {
    const Mesh m(100);
    CHECK(linear_viscosity(linear_spec(1.0, 0.0), m).max() == doctest::Approx(0.005).epsilon(1e-14));
    CHECK(linear_viscosity(linear_spec(1.0, 0.1), m).min() == 0.1);
    CHECK(linear_viscosity(linear_spec(1.0, 0.005), m).max() == doctest::Approx(0.005).epsilon(1e-14));
}

TEST_CASE("nu_0") {
    const NodalField bump(Mesh(4), {0.0, 1.0, 0.0, 0.0});
    CHECK(jump_quotient(bump, 0, 0.0) == 1.0);
    CHECK(jump_quotient(bump, 1, 0.0) == 1.0);
    CHECK(nu0_element(bump, 0, 0.0) == 0.5);

    // flat region: 0/0 read as 0
    const NodalField flat(Mesh(6), 2.0);
    CHECK(jump_quotient(flat, 3, 0.0) == 0.0);
    CHECK(nu0_element(flat, 3, 0.0) == 0.0);

    // linear through the element, kinks elsewhere
    const NodalField ramp(Mesh(8), {0, 1, 2, 3, 4, 3, 2, 1});
    CHECK(nu0_element(ramp, 1, 0.0) == 0.0);

    // symmetric peak: quotient 1, nu_0 half the element sup
    const NodalField peak(Mesh(8), {0, 1, 2, 3, 2, 1, 0, 0});
    CHECK(jump_quotient(peak, 3, 0.0) == 1.0);
    CHECK(nu0_element(peak, 3, 0.0) == 1.5);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto u = oracle::random_field(Mesh(9), rng);
        for (int i = 0; i < 9; ++i) {
            CHECK(nu0_element(u, i, 0.0) == doctest::Approx(nu0_brute(u, i, 0.0)).epsilon(1e-14));
            CHECK(nu0_element(u, i, 0.3) == doctest::Approx(nu0_brute(u, i, 0.3)).epsilon(1e-14));
            // bounded by half the element sup, decreasing in epsilon, homogeneous of degree one
            CHECK(nu0_element(u, i, 0.0) <= 0.5 * std::max(std::abs(u[i]), std::abs(u[i + 1])) + 1e-15);
            CHECK(nu0_element(u, i, 0.3) <= nu0_element(u, i, 0.0));
            NodalField scaled = u;
            for (auto& v : scaled.values()) v *= 3.0;
            CHECK(nu0_element(scaled, i, 0.0) == doctest::Approx(3.0 * nu0_element(u, i, 0.0)).epsilon(1e-13));
        }
    }
}

TEST_CASE("xi switch") {
    CHECK(xi_from_slopes(1, 2, 1));
    CHECK_FALSE(xi_from_slopes(1, 2, -1));
    CHECK(xi_from_slopes(2, 2, 1));
    CHECK_FALSE(xi_from_slopes(1, 2, 2));
    CHECK_FALSE(xi_from_slopes(-1, -0.5, -2));
    CHECK_FALSE(xi_from_slopes(0, 1, 0.5));

    const NodalField u(Mesh(6), {0, 1, 3, 4, 2, 1});  // slopes 6, 12, 6, -12, -6, -6
    CHECK(xi_indicator(u, 1));
    CHECK_FALSE(xi_indicator(u, 0));
    CHECK_FALSE(xi_indicator(u, 2));
}

TEST_CASE("nu_1") {
    CHECK(nu1_value(false, 0.3, 0.1, 1, 2, 1, Nu1Variant::Ratio) == 0.0);
    CHECK(nu1_value(true, 0.0, 0.0, 1, 2, 1, Nu1Variant::Ratio) == 0.0);
    CHECK(nu1_value(true, 0.3, 0.1, 1, 2, 1, Nu1Variant::Ratio) == doctest::Approx(0.15));
    CHECK(nu1_value(true, 0.3, 0.1, 1, 2, 1, Nu1Variant::Simplified) == doctest::Approx(0.3));

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double mid = 1.0 + d(rng);
        const double l = mid * d(rng), r = mid * d(rng) + 1e-3;
        const double a = d(rng), b = d(rng);
        CHECK(nu1_value(true, a, b, l, mid, r, Nu1Variant::Ratio) <=
              nu1_value(true, a, b, l, mid, r, Nu1Variant::Simplified));
    }
}

TEST_CASE("nonlinear viscosity") {
    ViscositySpec spec;
    spec.nu = 0.002;
    const auto c = nonlinear_viscosity(NodalField(Mesh(10), 0.5), spec);
    CHECK(c.min() == 0.002);
    CHECK(c.max() == 0.002);

    // at a local maximum the detector alone matches the linear value
    spec.nu = 0.0;
    const NodalField peak(Mesh(8), {0, 1, 2, 3, 2, 1, 0, 0});
    const double h = peak.mesh().h();
    const auto nh = nonlinear_viscosity(peak, spec);
    CHECK(nh[3] == doctest::Approx(h * 3.0 / 2.0 + h * nu1_element(peak, 3, 0.0, Nu1Variant::Ratio)));
    CHECK(nh[3] >= h * 3.0 / 2.0);

    spec.kind = ViscosityKind::Linear;
    spec.u0_sup = 2.0;
    CHECK(artificial_viscosity(peak, spec).max() == doctest::Approx(h));
}

TEST_CASE("nonlinear viscosity is small on resolved smooth data") {
    ViscositySpec spec;
    auto sample = [&](std::size_t n) {
        const Mesh m(n);
        const auto u = interpolate([](double x) { return std::sin(2 * std::numbers::pi * x); }, m);
        const auto nh = nonlinear_viscosity(u, spec);
        // elements in the monotone flank (0.1, 0.15), away from the extrema
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = m.node(static_cast<std::ptrdiff_t>(i));
            if (x > 0.1 && x < 0.15) worst = std::max(worst, nh[static_cast<std::ptrdiff_t>(i)]);
        }
        return worst;
    };
    const double a = sample(200), b = sample(400), c = sample(800);
    const double p1 = std::log2(a / b), p2 = std::log2(b / c);
    CHECK(p1 >= 1.3);
    CHECK(p1 <= 2.1);
    CHECK(p2 >= 1.3);
    CHECK(p2 <= 2.1);
}

TEST_CASE("spec validation") {
    ViscositySpec s;
    s.nu = -1.0;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.nu = 0.0;
    s.epsilon = -0.1;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.epsilon = 0.0;
    s.u0_sup = 0.0;
    CHECK_THROWS_AS(s.validate(), ConfigError);
}
