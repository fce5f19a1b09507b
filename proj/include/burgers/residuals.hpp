#pragma once

#include "burgers/cyclic_tridiagonal.hpp"
#include "burgers/mesh.hpp"

namespace burgers {

/// ||d/dx u||, exact for piecewise linears.
double gradient_norm(const NodalField& u) noexcept;

/// ||[d/dx u]||_N: Euclidean norm of the nodal slope jumps.
double slope_jump_norm(const NodalField& u) noexcept;

/// ||[u d/dx u]||_N with [u u']_i = u_i (s_i - s_{i-1}).
double convective_jump_norm(const NodalField& u) noexcept;

/// ||max(0, nu_hat - nu)^{1/2} d/dx u||.
double excess_viscosity_norm(const NodalField& u, const ElementField& nu_hat, double nu) noexcept;

/// min over v in V_h of ||v + u u'||, attained at v = -pi_h(u u').
/// `mass` must factor the consistent mass matrix of u's mesh.
double projection_residual_norm(const NodalField& u, const CyclicTridiagonalFactor& mass);

/// Integrands of the a posteriori estimator at one time level.
struct EstimatorRecord {
    double residual = 0.0;       ///< projection_residual_norm
    double excess_visc = 0.0;    ///< excess_viscosity_norm
    double jump_sq = 0.0;        ///< slope_jump_norm squared
    double conv_jump = 0.0;      ///< convective_jump_norm
    double dt_gradient = 0.0;    ///< ||d/dx (u^{n+1} - u^n)|| / dt for the step ending here, 0 at t = 0
};

}  // namespace burgers
