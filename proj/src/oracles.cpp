#include "burgers/oracles.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "burgers/errors.hpp"

namespace burgers::oracle {

namespace {

struct Gauss5 {
    std::array<double, 5> x;
    std::array<double, 5> w;
};

// on [0,1]
const Gauss5& gauss5() {
    static const Gauss5 g = [] {
        const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
        const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
        const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
        const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
        const std::array<double, 5> xr{-b, -a, 0.0, a, b};
        const std::array<double, 5> wr{wb, wa, 128.0 / 225.0, wa, wb};
        Gauss5 r{};
        for (int k = 0; k < 5; ++k) {
            r.x[k] = 0.5 * (xr[k] + 1.0);
            r.w[k] = 0.5 * wr[k];
        }
        return r;
    }();
    return g;
}

// hat function of node i restricted to element e (e = i-1 rising, e = i falling)
double hat(bool rising, double theta) { return rising ? theta : 1.0 - theta; }

}  // namespace

double convection(const NodalField& u, std::ptrdiff_t i) {
    const double h = u.mesh().h();
    const auto& g = gauss5();
    double sum = 0.0;
    for (const auto& [e, rising] : {std::pair{i - 1, true}, std::pair{i, false}}) {
        const double ua = u[e];
        const double ub = u[e + 1];
        const double du = (ub - ua) / h;
        for (int k = 0; k < 5; ++k) {
            const double th = g.x[k];
            const double uh = ua + th * (ub - ua);
            sum += g.w[k] * h * uh * du * hat(rising, th);
        }
    }
    return sum;
}

double viscous(const NodalField& u, const ElementField& nu_hat, std::ptrdiff_t i) {
    const double h = u.mesh().h();
    const auto& g = gauss5();
    double sum = 0.0;
    for (const auto& [e, rising] : {std::pair{i - 1, true}, std::pair{i, false}}) {
        const double du = (u[e + 1] - u[e]) / h;
        const double dv = rising ? 1.0 / h : -1.0 / h;
        for (int k = 0; k < 5; ++k) sum += g.w[k] * h * nu_hat[e] * du * dv;
    }
    return sum;
}

std::vector<double> dense_solve(const CyclicTridiagonal& m, const std::vector<double>& rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw SolverError("dense oracle: size mismatch");
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][(i + n - 1) % n] += m.lower[i];
        a[i][i] += m.diag[i];
        a[i][(i + 1) % n] += m.upper[i];
        a[i][n] = rhs[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        }
        if (a[piv][c] == 0.0) throw SolverError("dense oracle: singular matrix");
        std::swap(a[c], a[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double s = a[r][n];
        for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
        x[r] = s / a[r][r];
    }
    return x;
}

CyclicTridiagonal random_spd(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> extra(0.1, 2.0);
    // off[i] couples rows i and i+1 (mod n)
    std::vector<double> c(n);
    for (auto& v : c) v = off(rng);
    CyclicTridiagonal m = CyclicTridiagonal::uniform(n, 0.0, 0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t im = (i + n - 1) % n;
        m.upper[i] = c[i];
        m.lower[i] = c[im];
        m.diag[i] = std::abs(c[i]) + std::abs(c[im]) + extra(rng);
    }
    return m;
}

NodalField random_field(const Mesh& mesh, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(mesh.n_elems());
    for (auto& x : v) x = d(rng);
    return NodalField(mesh, std::move(v));
}

}  // namespace burgers::oracle
