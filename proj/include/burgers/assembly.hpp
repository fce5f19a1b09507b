#pragma once

#include <array>
#include <functional>

#include "burgers/cyclic_tridiagonal.hpp"
#include "burgers/mesh.hpp"

namespace burgers {

using ScalarFunction = std::function<double(double)>;

/// Gauss-Legendre rule on [0,1]: abscissae and weights summing to 1.
struct GaussRule4 {
    std::array<double, 4> points;
    std::array<double, 4> weights;
};

const GaussRule4& gauss4() noexcept;

/// Consistent P1 mass matrix (h/6)(1,4,1), periodic.
CyclicTridiagonal mass_matrix(const Mesh& mesh);

/// P1 stiffness matrix (1/h)(-1,2,-1), periodic.
CyclicTridiagonal stiffness_matrix(const Mesh& mesh);

/// Load vector b_i = int f v_i dx, four Gauss points per element.
std::vector<double> load_vector(const ScalarFunction& f, const Mesh& mesh);

/// L2 projection onto V_h (consistent mass solve).
NodalField l2_project(const ScalarFunction& f, const Mesh& mesh);

/// Consistent-mass projection of an arbitrary load vector.
NodalField project_load(const Mesh& mesh, std::span<const double> load);

/// int_I u_h (u_h)' v_i dx in closed form.
///
/// With s1, s2 the slopes on I_{i-1}, I_i:
///   (h^2/3) s1^2 + (h^2/6) s2^2 + (h/2) u(x_{i-1}) s1 + (h/2) u(x_i) s2.
double convection_term(const NodalField& u, std::ptrdiff_t i) noexcept;

/// int_I nu_hat u_h' v_i' dx = nu_{i-1} s1 - nu_i s2.
double viscous_term(const NodalField& u, const ElementField& nu_hat, std::ptrdiff_t i) noexcept;

/// Nodal time derivative of the lumped-mass scheme:
///   du_i/dt = -(convection_term + viscous_term) / h.
NodalField semidiscrete_rhs(const NodalField& u, const ElementField& nu_hat);

}  // namespace burgers
