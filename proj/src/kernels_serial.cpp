#include "burgers/assembly.hpp"
#include "burgers/kernels.hpp"

namespace burgers {

namespace serial {

ElementField viscosity(const NodalField& u, const ViscositySpec& spec) { return artificial_viscosity(u, spec); }

NodalField rhs(const NodalField& u, const ElementField& nu_hat) { return semidiscrete_rhs(u, nu_hat); }

}  // namespace serial

ElementField compute_viscosity(const NodalField& u, const ViscositySpec& spec, Backend backend) {
    return backend == Backend::Serial ? serial::viscosity(u, spec) : omp::viscosity(u, spec);
}

NodalField compute_rhs(const NodalField& u, const ElementField& nu_hat, Backend backend) {
    return backend == Backend::Serial ? serial::rhs(u, nu_hat) : omp::rhs(u, nu_hat);
}

}  // namespace burgers
