#include "burgers/viscosity.hpp"

#include <algorithm>
#include <cmath>

namespace burgers {

void ViscositySpec::validate() const {
    if (!(nu >= 0.0)) throw ConfigError("physical viscosity must be >= 0");
    if (!(epsilon >= 0.0)) throw ConfigError("epsilon must be >= 0");
    if (!(u0_sup > 0.0)) throw ConfigError("U0 must be > 0");
}

ElementField linear_viscosity(const ViscositySpec& spec, const Mesh& mesh) {
    return ElementField(mesh, std::max(spec.u0_sup * mesh.h() / 2.0, spec.nu));
}

double jump_quotient(const NodalField& u, std::ptrdiff_t i, double epsilon) noexcept {
    const auto [jump, avg] = slope_jump_and_avg(u, i);
    const double denom = 2.0 * avg + epsilon;
    if (denom == 0.0) return 0.0;
    return std::abs(jump) / denom;
}

double nu0_element(const NodalField& u, std::ptrdiff_t i, double epsilon) noexcept {
    const double sup = std::max(std::abs(u[i]), std::abs(u[i + 1]));
    const double q = std::max(jump_quotient(u, i, epsilon), jump_quotient(u, i + 1, epsilon));
    return 0.5 * sup * q;
}

bool xi_from_slopes(double left, double mid, double right) noexcept {
    return mid > 0.0 && mid > right && right > 0.0 && mid >= left && left > 0.0;
}

bool xi_indicator(const NodalField& u, std::ptrdiff_t i) noexcept {
    return xi_from_slopes(element_slope(u, i - 1), element_slope(u, i), element_slope(u, i + 1));
}

double nu1_value(bool xi, double nu0_left, double nu0_right, double s_left, double s_mid, double s_right,
                 Nu1Variant variant) noexcept {
    if (!xi) return 0.0;
    if (variant == Nu1Variant::Simplified) return std::max(nu0_left, nu0_right);
    // xi guarantees s_mid > 0
    return std::max(nu0_left * s_left / s_mid, nu0_right * s_right / s_mid);
}

double nu1_element(const NodalField& u, std::ptrdiff_t i, double epsilon, Nu1Variant variant) noexcept {
    const double sl = element_slope(u, i - 1);
    const double sm = element_slope(u, i);
    const double sr = element_slope(u, i + 1);
    const bool xi = xi_from_slopes(sl, sm, sr);
    if (!xi) return 0.0;
    return nu1_value(xi, nu0_element(u, i - 1, epsilon), nu0_element(u, i + 1, epsilon), sl, sm, sr, variant);
}

ElementField nonlinear_viscosity(const NodalField& u, const ViscositySpec& spec) {
    const Mesh& mesh = u.mesh();
    const double h = mesh.h();
    ElementField out(mesh);
    for (std::size_t e = 0; e < mesh.n_elems(); ++e) {
        const auto i = static_cast<std::ptrdiff_t>(e);
        const double n0 = nu0_element(u, i, spec.epsilon);
        const double n1 = nu1_element(u, i, spec.epsilon, spec.nu1_variant);
        out.at_elem(e) = std::max(spec.nu, h * (n0 + n1));
    }
    return out;
}

ElementField artificial_viscosity(const NodalField& u, const ViscositySpec& spec) {
    return spec.kind == ViscosityKind::Linear ? linear_viscosity(spec, u.mesh()) : nonlinear_viscosity(u, spec);
}

}  // namespace burgers
