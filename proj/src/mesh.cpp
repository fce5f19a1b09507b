#include "burgers/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace burgers {

Mesh::Mesh(std::size_t n_elems) : n_(n_elems), h_(0.0) {
    if (n_elems < min_elems) {
        throw ConfigError("mesh needs at least " + std::to_string(min_elems) +
                          " elements for the three-element viscosity stencil, got " +
                          std::to_string(n_elems));
    }
    h_ = 1.0 / static_cast<double>(n_elems);
}

Mesh build_mesh(std::size_t n_elems) { return Mesh(n_elems); }

NodalField::NodalField(const Mesh& mesh, double value) : mesh_(mesh), values_(mesh.n_elems(), value) {}

NodalField::NodalField(const Mesh& mesh, std::vector<double> values)
    : mesh_(mesh), values_(std::move(values)) {
    if (values_.size() != mesh_.n_elems()) {
        throw MeshMismatch("nodal field needs " + std::to_string(mesh_.n_elems()) + " values, got " +
                           std::to_string(values_.size()));
    }
}

double NodalField::evaluate(double x) const noexcept {
    const double n = static_cast<double>(mesh_.n_elems());
    double s = x - std::floor(x);
    double pos = s * n;
    auto i = static_cast<std::ptrdiff_t>(std::floor(pos));
    double theta = pos - static_cast<double>(i);
    return (1.0 - theta) * (*this)[i] + theta * (*this)[i + 1];
}

double NodalField::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

ElementField::ElementField(const Mesh& mesh, double value) : mesh_(mesh), values_(mesh.n_elems(), value) {}

ElementField::ElementField(const Mesh& mesh, std::vector<double> values)
    : mesh_(mesh), values_(std::move(values)) {
    if (values_.size() != mesh_.n_elems()) {
        throw MeshMismatch("element field needs " + std::to_string(mesh_.n_elems()) + " values, got " +
                           std::to_string(values_.size()));
    }
}

double ElementField::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }
double ElementField::min() const noexcept { return *std::min_element(values_.begin(), values_.end()); }

double element_slope(const NodalField& u, std::ptrdiff_t i) noexcept {
    return (u[i + 1] - u[i]) / u.mesh().h();
}

SlopeJump slope_jump_and_avg(const NodalField& u, std::ptrdiff_t i) noexcept {
    const double left = element_slope(u, i - 1);
    const double right = element_slope(u, i);
    return {right - left, 0.5 * (std::abs(right) + std::abs(left))};
}

double total_variation(const NodalField& u) noexcept {
    double tv = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) tv += std::abs(u[i + 1] - u[i]);
    return tv;
}

double max_slope(const NodalField& u) noexcept {
    double m = element_slope(u, 0);
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    for (std::ptrdiff_t i = 1; i < n; ++i) m = std::max(m, element_slope(u, i));
    return m;
}

double lumped_norm(const NodalField& u) noexcept {
    double s = 0.0;
    for (double v : u.values()) s += v * v;
    return std::sqrt(s * u.mesh().h());
}

NodalField prolongate(const NodalField& coarse, const Mesh& fine) {
    const std::size_t nc = coarse.mesh().n_elems();
    const std::size_t nf = fine.n_elems();
    if (nf % nc != 0) {
        throw MeshMismatch("fine mesh (" + std::to_string(nf) + ") is not a refinement of coarse mesh (" +
                           std::to_string(nc) + ")");
    }
    const std::size_t r = nf / nc;
    std::vector<double> v(nf);
    for (std::size_t j = 0; j < nf; ++j) {
        const std::size_t i = j / r;
        const double theta = static_cast<double>(j % r) / static_cast<double>(r);
        const auto ii = static_cast<std::ptrdiff_t>(i);
        v[j] = (1.0 - theta) * coarse[ii] + theta * coarse[ii + 1];
    }
    return NodalField(fine, std::move(v));
}

}  // namespace burgers
