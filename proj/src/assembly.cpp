#include "burgers/assembly.hpp"

#include <cmath>

namespace burgers {

const GaussRule4& gauss4() noexcept {
    static const GaussRule4 rule = [] {
        const double a = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
        const double b = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
        const double wa = (18.0 + std::sqrt(30.0)) / 36.0;
        const double wb = (18.0 - std::sqrt(30.0)) / 36.0;
        GaussRule4 r{};
        r.points = {0.5 * (1.0 - b), 0.5 * (1.0 - a), 0.5 * (1.0 + a), 0.5 * (1.0 + b)};
        r.weights = {0.5 * wb, 0.5 * wa, 0.5 * wa, 0.5 * wb};
        return r;
    }();
    return rule;
}

CyclicTridiagonal mass_matrix(const Mesh& mesh) {
    const double h = mesh.h();
    return CyclicTridiagonal::uniform(mesh.n_elems(), h / 6.0, 4.0 * h / 6.0, h / 6.0);
}

CyclicTridiagonal stiffness_matrix(const Mesh& mesh) {
    const double h = mesh.h();
    return CyclicTridiagonal::uniform(mesh.n_elems(), -1.0 / h, 2.0 / h, -1.0 / h);
}

std::vector<double> load_vector(const ScalarFunction& f, const Mesh& mesh) {
    const std::size_t n = mesh.n_elems();
    const double h = mesh.h();
    const auto& g = gauss4();
    std::vector<double> b(n, 0.0);
    for (std::size_t e = 0; e < n; ++e) {
        const double x0 = static_cast<double>(e) * h;
        for (std::size_t q = 0; q < 4; ++q) {
            const double xi = g.points[q];
            const double fw = f(x0 + xi * h) * g.weights[q] * h;
            b[e] += fw * (1.0 - xi);
            b[(e + 1) % n] += fw * xi;
        }
    }
    return b;
}

NodalField project_load(const Mesh& mesh, std::span<const double> load) {
    return NodalField(mesh, cyclic_tridiag_solve(mass_matrix(mesh), load));
}

NodalField l2_project(const ScalarFunction& f, const Mesh& mesh) {
    return project_load(mesh, load_vector(f, mesh));
}

double convection_term(const NodalField& u, std::ptrdiff_t i) noexcept {
    const double h = u.mesh().h();
    const double s1 = element_slope(u, i - 1);
    const double s2 = element_slope(u, i);
    return (h * h / 3.0) * s1 * s1 + (h * h / 6.0) * s2 * s2 + (h / 2.0) * u[i - 1] * s1 + (h / 2.0) * u[i] * s2;
}

double viscous_term(const NodalField& u, const ElementField& nu_hat, std::ptrdiff_t i) noexcept {
    return nu_hat[i - 1] * element_slope(u, i - 1) - nu_hat[i] * element_slope(u, i);
}

NodalField semidiscrete_rhs(const NodalField& u, const ElementField& nu_hat) {
    if (!(u.mesh() == nu_hat.mesh())) throw MeshMismatch("solution and viscosity live on different meshes");
    NodalField out(u.mesh());
    const double h = u.mesh().h();
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto ii = static_cast<std::ptrdiff_t>(i);
        out.at_node(i) = -(convection_term(u, ii) + viscous_term(u, nu_hat, ii)) / h;
    }
    return out;
}

}  // namespace burgers
