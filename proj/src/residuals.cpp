#include "burgers/residuals.hpp"

#include <algorithm>
#include <cmath>

#include "burgers/assembly.hpp"

namespace burgers {

double gradient_norm(const NodalField& u) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    double s = 0.0;
    for (std::ptrdiff_t e = 0; e < n; ++e) {
        const double g = element_slope(u, e);
        s += g * g;
    }
    return std::sqrt(s * u.mesh().h());
}

double slope_jump_norm(const NodalField& u) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    double s = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double j = slope_jump_and_avg(u, i).jump;
        s += j * j;
    }
    return std::sqrt(s);
}

double convective_jump_norm(const NodalField& u) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    double s = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double j = u[i] * slope_jump_and_avg(u, i).jump;
        s += j * j;
    }
    return std::sqrt(s);
}

double excess_viscosity_norm(const NodalField& u, const ElementField& nu_hat, double nu) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    double s = 0.0;
    for (std::ptrdiff_t e = 0; e < n; ++e) {
        const double g = element_slope(u, e);
        s += std::max(0.0, nu_hat[e] - nu) * g * g;
    }
    return std::sqrt(s * u.mesh().h());
}

double projection_residual_norm(const NodalField& u, const CyclicTridiagonalFactor& mass) {
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    const double h = u.mesh().h();
    std::vector<double> b(u.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) b[i] = convection_term(u, i);
    const std::vector<double> p = mass.solve(b);

    // u u' is linear on each element, so the difference is too
    double s = 0.0;
    for (std::ptrdiff_t e = 0; e < n; ++e) {
        const std::size_t ep = u.mesh().wrap(e + 1);
        const double g = element_slope(u, e);
        const double a = u[e] * g - p[e];
        const double c = u[e + 1] * g - p[ep];
        s += (h / 3.0) * (a * a + a * c + c * c);
    }
    return std::sqrt(std::max(0.0, s));
}

}  // namespace burgers
