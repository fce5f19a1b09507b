#pragma once

#include "burgers/cyclic_tridiagonal.hpp"
#include "burgers/mesh.hpp"

namespace burgers {

struct FilterSpec {
    double delta;
    Mesh mesh;

    /// Throws ConfigError unless delta > 0.
    void validate() const;
};

/// Helmholtz filter -delta^2 u'' + u = f discretized with P1 elements,
/// (delta^2 K + M) u~ = M f. The factorization is built once per spec.
class HelmholtzFilter {
public:
    explicit HelmholtzFilter(const FilterSpec& spec);

    const FilterSpec& spec() const noexcept { return spec_; }
    NodalField apply(const NodalField& u) const;

private:
    FilterSpec spec_;
    CyclicTridiagonal mass_;
    CyclicTridiagonalFactor factor_;
};

NodalField apply_filter(const NodalField& u, const FilterSpec& spec);

/// (||delta u'||^2 + ||u||^2)^{1/2}, exact for piecewise linears.
double delta_norm(const NodalField& u, double delta);

/// |||filter(u_ref - u_h)|||_delta on the fine mesh of spec. u_h is injected
/// exactly at fine nodes; throws MeshMismatch unless the meshes nest.
double filtered_error(const NodalField& u_ref, const NodalField& u_h, const FilterSpec& spec);
double filtered_error(const NodalField& u_ref, const NodalField& u_h, const HelmholtzFilter& filter);

}  // namespace burgers
