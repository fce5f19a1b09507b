#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace burgers {

/// Periodic tridiagonal matrix. Row i holds lower[i] at column i-1, diag[i]
/// at column i and upper[i] at column i+1, columns taken modulo n, so
/// lower[0] and upper[n-1] are the corner couplings.
struct CyclicTridiagonal {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;

    CyclicTridiagonal() = default;
    CyclicTridiagonal(std::vector<double> lo, std::vector<double> d, std::vector<double> up);

    /// Constant-stencil matrix (a, b, c) repeated on every row.
    static CyclicTridiagonal uniform(std::size_t n, double a, double b, double c);

    std::size_t size() const noexcept { return diag.size(); }

    std::vector<double> apply(std::span<const double> x) const;

    /// Linear combination alpha*this + beta*other (same size).
    CyclicTridiagonal combine(double alpha, const CyclicTridiagonal& other, double beta) const;
};

/// LU factors of a cyclic tridiagonal matrix, computed once and reused.
///
/// The periodic corners are removed with a rank-one Sherman-Morrison
/// correction; what remains is an ordinary tridiagonal elimination without
/// pivoting. Construction throws SolverError on a zero pivot or when the
/// correction is singular.
class CyclicTridiagonalFactor {
public:
    explicit CyclicTridiagonalFactor(const CyclicTridiagonal& m);

    std::size_t size() const noexcept { return denom_.size(); }

    std::vector<double> solve(std::span<const double> rhs) const;

private:
    void thomas(std::span<const double> rhs, std::span<double> out) const;

    std::vector<double> lower_;
    std::vector<double> upper_;
    std::vector<double> cprime_;
    std::vector<double> denom_;
    std::vector<double> z_;  // B^{-1} u for the rank-one correction vector u
    double gamma_ = 0.0;
    double v_last_ = 0.0;    // last entry of the correction vector v (first is 1)
    double vz_ = 0.0;        // 1 + v.z
};

/// One-shot solve. Throws SolverError on breakdown or a size mismatch.
std::vector<double> cyclic_tridiag_solve(const CyclicTridiagonal& m, std::span<const double> rhs);

}  // namespace burgers
