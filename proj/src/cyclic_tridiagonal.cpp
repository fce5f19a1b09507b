#include "burgers/cyclic_tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "burgers/errors.hpp"

namespace burgers {

CyclicTridiagonal::CyclicTridiagonal(std::vector<double> lo, std::vector<double> d, std::vector<double> up)
    : lower(std::move(lo)), diag(std::move(d)), upper(std::move(up)) {
    if (lower.size() != diag.size() || upper.size() != diag.size()) {
        throw SolverError("cyclic tridiagonal bands have mismatched lengths");
    }
}

CyclicTridiagonal CyclicTridiagonal::uniform(std::size_t n, double a, double b, double c) {
    return {std::vector<double>(n, a), std::vector<double>(n, b), std::vector<double>(n, c)};
}

std::vector<double> CyclicTridiagonal::apply(std::span<const double> x) const {
    const std::size_t n = size();
    if (x.size() != n) throw SolverError("matrix-vector size mismatch");
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t im = (i + n - 1) % n;
        const std::size_t ip = (i + 1) % n;
        y[i] = lower[i] * x[im] + diag[i] * x[i] + upper[i] * x[ip];
    }
    return y;
}

CyclicTridiagonal CyclicTridiagonal::combine(double alpha, const CyclicTridiagonal& other, double beta) const {
    if (other.size() != size()) throw SolverError("cannot combine matrices of different sizes");
    CyclicTridiagonal r = *this;
    for (std::size_t i = 0; i < size(); ++i) {
        r.lower[i] = alpha * lower[i] + beta * other.lower[i];
        r.diag[i] = alpha * diag[i] + beta * other.diag[i];
        r.upper[i] = alpha * upper[i] + beta * other.upper[i];
    }
    return r;
}

namespace {

double scale_of(const CyclicTridiagonal& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        s = std::max({s, std::abs(m.lower[i]), std::abs(m.diag[i]), std::abs(m.upper[i])});
    }
    return s;
}

}  // namespace

CyclicTridiagonalFactor::CyclicTridiagonalFactor(const CyclicTridiagonal& m)
    : lower_(m.lower), upper_(m.upper), cprime_(m.size()), denom_(m.size()), z_(m.size()) {
    const std::size_t n = m.size();
    if (n < 3) throw SolverError("cyclic tridiagonal solve needs n >= 3, got " + std::to_string(n));

    const double tiny = 1e-14 * scale_of(m);
    if (!(tiny > 0.0) || !std::isfinite(tiny)) throw SolverError("matrix is zero or non-finite");

    // A = B + u v^T with u = (gamma, 0.., 0, alpha), v = (1, 0.., 0, beta/gamma)
    const double beta = m.lower[0];       // A(0, n-1)
    const double alpha = m.upper[n - 1];  // A(n-1, 0)
    gamma_ = m.diag[0] != 0.0 ? -m.diag[0] : -1.0;
    v_last_ = beta / gamma_;

    std::vector<double> diag = m.diag;
    diag[0] -= gamma_;
    diag[n - 1] -= alpha * beta / gamma_;

    // Tridiagonal LU of B; lower_[0] and upper_[n-1] are not used by B.
    double d = diag[0];
    if (std::abs(d) <= tiny) throw SolverError("zero pivot at row 0");
    denom_[0] = d;
    cprime_[0] = upper_[0] / d;
    for (std::size_t i = 1; i < n; ++i) {
        d = diag[i] - lower_[i] * cprime_[i - 1];
        if (std::abs(d) <= tiny || !std::isfinite(d)) {
            throw SolverError("zero pivot at row " + std::to_string(i));
        }
        denom_[i] = d;
        cprime_[i] = (i + 1 < n) ? upper_[i] / d : 0.0;
    }

    std::vector<double> u(n, 0.0);
    u[0] = gamma_;
    u[n - 1] = alpha;
    thomas(u, z_);
    vz_ = 1.0 + z_[0] + v_last_ * z_[n - 1];
    if (std::abs(vz_) <= 1e-14 || !std::isfinite(vz_)) {
        throw SolverError("singular rank-one correction in cyclic solve");
    }
}

void CyclicTridiagonalFactor::thomas(std::span<const double> rhs, std::span<double> out) const {
    const std::size_t n = denom_.size();
    out[0] = rhs[0] / denom_[0];
    for (std::size_t i = 1; i < n; ++i) out[i] = (rhs[i] - lower_[i] * out[i - 1]) / denom_[i];
    for (std::size_t i = n - 1; i-- > 0;) out[i] -= cprime_[i] * out[i + 1];
}

std::vector<double> CyclicTridiagonalFactor::solve(std::span<const double> rhs) const {
    const std::size_t n = size();
    if (rhs.size() != n) {
        throw SolverError("right-hand side has " + std::to_string(rhs.size()) + " entries, matrix is " +
                          std::to_string(n));
    }
    std::vector<double> y(n);
    thomas(rhs, y);
    const double factor = (y[0] + v_last_ * y[n - 1]) / vz_;
    for (std::size_t i = 0; i < n; ++i) {
        y[i] -= factor * z_[i];
        if (!std::isfinite(y[i])) throw SolverError("non-finite solution entry at row " + std::to_string(i));
    }
    return y;
}

std::vector<double> cyclic_tridiag_solve(const CyclicTridiagonal& m, std::span<const double> rhs) {
    return CyclicTridiagonalFactor(m).solve(rhs);
}

}  // namespace burgers
