#pragma once

#include "burgers/mesh.hpp"
#include "burgers/viscosity.hpp"

namespace burgers {

/// Serial is the per-node reference built on the single-entry queries;
/// OpenMP evaluates the same expressions over flat arrays. Both produce
/// bitwise identical results.
enum class Backend { Serial, OpenMP };

namespace serial {
ElementField viscosity(const NodalField& u, const ViscositySpec& spec);
NodalField rhs(const NodalField& u, const ElementField& nu_hat);
}  // namespace serial

namespace omp {
ElementField viscosity(const NodalField& u, const ViscositySpec& spec);
NodalField rhs(const NodalField& u, const ElementField& nu_hat);
}  // namespace omp

ElementField compute_viscosity(const NodalField& u, const ViscositySpec& spec, Backend backend);
NodalField compute_rhs(const NodalField& u, const ElementField& nu_hat, Backend backend);

}  // namespace burgers
