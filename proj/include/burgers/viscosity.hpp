#pragma once

#include "burgers/mesh.hpp"

namespace burgers {

enum class ViscosityKind { Linear, Nonlinear };

/// Ratio: nu_1 weights neighbour nu_0 by the slope ratio.
/// Simplified: nu_1 takes the larger neighbour nu_0 directly.
enum class Nu1Variant { Ratio, Simplified };

struct ViscositySpec {
    ViscosityKind kind = ViscosityKind::Nonlinear;
    double nu = 0.0;        ///< physical viscosity
    double epsilon = 0.0;   ///< regularization in the nu_0 quotient
    Nu1Variant nu1_variant = Nu1Variant::Ratio;
    double u0_sup = 1.0;    ///< U_0 = sup |pi_h u_0|

    /// Throws ConfigError unless nu >= 0, epsilon >= 0 and u0_sup > 0.
    void validate() const;
};

/// Constant max(U_0 h / 2, nu).
ElementField linear_viscosity(const ViscositySpec& spec, const Mesh& mesh);

/// |jump| / (2 avg + eps) at node i, with 0/0 read as 0.
double jump_quotient(const NodalField& u, std::ptrdiff_t i, double epsilon) noexcept;

/// Shock detector on element I_i: half the element sup of |u_h| times the
/// larger endpoint jump quotient.
double nu0_element(const NodalField& u, std::ptrdiff_t i, double epsilon) noexcept;

/// Switch selecting an element where the slope has a local positive maximum.
/// Strict against the right neighbour, ties allowed on the left.
bool xi_from_slopes(double left, double mid, double right) noexcept;
bool xi_indicator(const NodalField& u, std::ptrdiff_t i) noexcept;

/// nu_1 from precomputed neighbour data; returns 0 when the switch is off.
double nu1_value(bool xi, double nu0_left, double nu0_right, double s_left, double s_mid, double s_right,
                 Nu1Variant variant) noexcept;

double nu1_element(const NodalField& u, std::ptrdiff_t i, double epsilon, Nu1Variant variant) noexcept;

/// Per element max(nu, h (nu_0 + nu_1)).
ElementField nonlinear_viscosity(const NodalField& u, const ViscositySpec& spec);

/// Dispatches on spec.kind.
ElementField artificial_viscosity(const NodalField& u, const ViscositySpec& spec);

}  // namespace burgers
