#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "burgers/errors.hpp"

namespace burgers {

/// Uniform periodic partition of (0,1) into N elements.
///
/// Nodes are x_i = i*h for i = 0..N-1; node N is identified with node 0, and
/// element I_i = [x_i, x_{i+1}] wraps the same way. Every index passed to the
/// field queries below is reduced modulo N.
class Mesh {
public:
    static constexpr std::size_t min_elems = 3;

    /// Throws ConfigError when n_elems < 3 (the nonlinear viscosity stencil
    /// spans three distinct elements).
    explicit Mesh(std::size_t n_elems);

    std::size_t n_elems() const noexcept { return n_; }
    double h() const noexcept { return h_; }
    double node(std::ptrdiff_t i) const noexcept { return static_cast<double>(wrap(i)) * h_; }

    std::size_t wrap(std::ptrdiff_t i) const noexcept {
        const auto n = static_cast<std::ptrdiff_t>(n_);
        const auto r = i % n;
        return static_cast<std::size_t>(r < 0 ? r + n : r);
    }

    friend bool operator==(const Mesh&, const Mesh&) = default;

private:
    std::size_t n_;
    double h_;
};

Mesh build_mesh(std::size_t n_elems);

/// Continuous periodic piecewise-linear function stored by its N nodal values.
class NodalField {
public:
    explicit NodalField(const Mesh& mesh, double value = 0.0);
    NodalField(const Mesh& mesh, std::vector<double> values);

    const Mesh& mesh() const noexcept { return mesh_; }
    std::size_t size() const noexcept { return values_.size(); }

    double operator[](std::ptrdiff_t i) const noexcept { return values_[mesh_.wrap(i)]; }
    double& at_node(std::size_t i) noexcept { return values_[i]; }

    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

    /// Piecewise-linear interpolant at any real x; 1-periodic.
    double evaluate(double x) const noexcept;

    double max_abs() const noexcept;

private:
    Mesh mesh_;
    std::vector<double> values_;
};

/// One scalar per element I_i.
class ElementField {
public:
    explicit ElementField(const Mesh& mesh, double value = 0.0);
    ElementField(const Mesh& mesh, std::vector<double> values);

    const Mesh& mesh() const noexcept { return mesh_; }
    std::size_t size() const noexcept { return values_.size(); }

    double operator[](std::ptrdiff_t i) const noexcept { return values_[mesh_.wrap(i)]; }
    double& at_elem(std::size_t i) noexcept { return values_[i]; }

    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

    double max() const noexcept;
    double min() const noexcept;

private:
    Mesh mesh_;
    std::vector<double> values_;
};

/// (u_{i+1} - u_i)/h with periodic wraparound.
double element_slope(const NodalField& u, std::ptrdiff_t i) noexcept;

struct SlopeJump {
    double jump;     ///< slope on I_i minus slope on I_{i-1}
    double avg_abs;  ///< mean of the two absolute slopes
};

SlopeJump slope_jump_and_avg(const NodalField& u, std::ptrdiff_t i) noexcept;

/// Sum of |u_{i+1} - u_i| over the periodic ring, i.e. the integral of |u'|.
double total_variation(const NodalField& u) noexcept;

/// Largest element slope (signed, not absolute).
double max_slope(const NodalField& u) noexcept;

/// Lumped (nodal quadrature) norm sqrt(sum_i u_i^2 h).
double lumped_norm(const NodalField& u) noexcept;

/// Nodal interpolant of f on the mesh.
template <class F>
NodalField interpolate(F&& f, const Mesh& mesh) {
    std::vector<double> v(mesh.n_elems());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(mesh.node(static_cast<std::ptrdiff_t>(i)));
    return NodalField(mesh, std::move(v));
}

/// Exact evaluation of a coarse field at the nodes of a fine mesh whose
/// element count is a multiple of the coarse one. Throws MeshMismatch otherwise.
NodalField prolongate(const NodalField& coarse, const Mesh& fine);

}  // namespace burgers
