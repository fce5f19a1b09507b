#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "burgers/cyclic_tridiagonal.hpp"
#include "burgers/mesh.hpp"

// Independent slow evaluations used to cross-check the closed-form kernels.

namespace burgers::oracle {

/// int u_h u_h' v_i dx by 5-point Gauss quadrature on the two elements around x_i.
double convection(const NodalField& u, std::ptrdiff_t i);

/// int nu_hat u_h' v_i' dx by 5-point Gauss quadrature.
double viscous(const NodalField& u, const ElementField& nu_hat, std::ptrdiff_t i);

/// Expand to a dense matrix and solve with partially pivoted Gaussian elimination.
std::vector<double> dense_solve(const CyclicTridiagonal& m, const std::vector<double>& rhs);

/// Random symmetric strictly diagonally dominant cyclic matrix (hence SPD).
CyclicTridiagonal random_spd(std::size_t n, std::mt19937_64& rng);

/// Nodal values uniform in [lo, hi].
NodalField random_field(const Mesh& mesh, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0);

}  // namespace burgers::oracle
