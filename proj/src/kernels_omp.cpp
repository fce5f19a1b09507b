#include <algorithm>
#include <cmath>
#include <vector>

#include "burgers/kernels.hpp"

namespace burgers::omp {

namespace {

// below this the fork/join costs more than the loop
constexpr std::ptrdiff_t kParallelMin = 4096;

inline std::ptrdiff_t prev(std::ptrdiff_t i, std::ptrdiff_t n) { return i == 0 ? n - 1 : i - 1; }
inline std::ptrdiff_t next(std::ptrdiff_t i, std::ptrdiff_t n) { return i == n - 1 ? 0 : i + 1; }

}  // namespace

ElementField viscosity(const NodalField& u, const ViscositySpec& spec) {
    const Mesh& mesh = u.mesh();
    const auto n = static_cast<std::ptrdiff_t>(mesh.n_elems());
    const double h = mesh.h();

    if (spec.kind == ViscosityKind::Linear) return ElementField(mesh, std::max(spec.u0_sup * h / 2.0, spec.nu));

    const double* uv = u.values().data();
    const double eps = spec.epsilon;
    std::vector<double> s(n), q(n), nu0(n);
    std::vector<double> out(n);

#pragma omp parallel if (n >= kParallelMin)
    {
#pragma omp for schedule(static)
        for (std::ptrdiff_t e = 0; e < n; ++e) s[e] = (uv[next(e, n)] - uv[e]) / h;

#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const double left = s[prev(i, n)];
            const double right = s[i];
            const double jump = right - left;
            const double avg = 0.5 * (std::abs(right) + std::abs(left));
            const double denom = 2.0 * avg + eps;
            q[i] = denom == 0.0 ? 0.0 : std::abs(jump) / denom;
        }

#pragma omp for schedule(static)
        for (std::ptrdiff_t e = 0; e < n; ++e) {
            const std::ptrdiff_t ep = next(e, n);
            const double sup = std::max(std::abs(uv[e]), std::abs(uv[ep]));
            nu0[e] = 0.5 * sup * std::max(q[e], q[ep]);
        }

#pragma omp for schedule(static)
        for (std::ptrdiff_t e = 0; e < n; ++e) {
            const std::ptrdiff_t el = prev(e, n);
            const std::ptrdiff_t er = next(e, n);
            const double sl = s[el];
            const double sm = s[e];
            const double sr = s[er];
            double n1 = 0.0;
            if (xi_from_slopes(sl, sm, sr)) n1 = nu1_value(true, nu0[el], nu0[er], sl, sm, sr, spec.nu1_variant);
            out[e] = std::max(spec.nu, h * (nu0[e] + n1));
        }
    }
    return ElementField(mesh, std::move(out));
}

NodalField rhs(const NodalField& u, const ElementField& nu_hat) {
    if (!(u.mesh() == nu_hat.mesh())) throw MeshMismatch("solution and viscosity live on different meshes");
    const Mesh& mesh = u.mesh();
    const auto n = static_cast<std::ptrdiff_t>(mesh.n_elems());
    const double h = mesh.h();
    const double* uv = u.values().data();
    const double* nv = nu_hat.values().data();
    std::vector<double> out(n);

#pragma omp parallel for schedule(static) if (n >= kParallelMin)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::ptrdiff_t im = prev(i, n);
        const std::ptrdiff_t ip = next(i, n);
        const double s1 = (uv[i] - uv[im]) / h;
        const double s2 = (uv[ip] - uv[i]) / h;
        const double conv = (h * h / 3.0) * s1 * s1 + (h * h / 6.0) * s2 * s2 + (h / 2.0) * uv[im] * s1 +
                            (h / 2.0) * uv[i] * s2;
        const double visc = nv[im] * s1 - nv[i] * s2;
        out[i] = -(conv + visc) / h;
    }
    return NodalField(mesh, std::move(out));
}

}  // namespace burgers::omp
