#include "burgers/filter.hpp"

#include <cmath>

#include "burgers/assembly.hpp"

namespace burgers {

void FilterSpec::validate() const {
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("filter width must be positive");
}

namespace {

CyclicTridiagonal helmholtz(const FilterSpec& spec) {
    spec.validate();
    return stiffness_matrix(spec.mesh).combine(spec.delta * spec.delta, mass_matrix(spec.mesh), 1.0);
}

}  // namespace

HelmholtzFilter::HelmholtzFilter(const FilterSpec& spec)
    : spec_(spec), mass_(mass_matrix(spec.mesh)), factor_(helmholtz(spec)) {}

NodalField HelmholtzFilter::apply(const NodalField& u) const {
    if (!(u.mesh() == spec_.mesh)) throw MeshMismatch("field is not on the filter mesh");
    return NodalField(spec_.mesh, factor_.solve(mass_.apply(u.values())));
}

NodalField apply_filter(const NodalField& u, const FilterSpec& spec) { return HelmholtzFilter(spec).apply(u); }

double delta_norm(const NodalField& u, double delta) {
    if (!(delta >= 0.0)) throw ConfigError("delta must be >= 0");
    const double h = u.mesh().h();
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    double grad = 0.0;
    double l2 = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double a = u[i];
        const double b = u[i + 1];
        const double s = (b - a) / h;
        grad += h * s * s;
        l2 += (h / 3.0) * (a * a + a * b + b * b);
    }
    return std::sqrt(delta * delta * grad + l2);
}

double filtered_error(const NodalField& u_ref, const NodalField& u_h, const HelmholtzFilter& filter) {
    const Mesh& fine = filter.spec().mesh;
    if (!(u_ref.mesh() == fine)) throw MeshMismatch("reference is not on the filter mesh");
    const NodalField injected = prolongate(u_h, fine);
    NodalField e(fine);
    for (std::size_t i = 0; i < e.size(); ++i) e.at_node(i) = u_ref.values()[i] - injected.values()[i];
    return delta_norm(filter.apply(e), filter.spec().delta);
}

double filtered_error(const NodalField& u_ref, const NodalField& u_h, const FilterSpec& spec) {
    return filtered_error(u_ref, u_h, HelmholtzFilter(spec));
}

}  // namespace burgers
