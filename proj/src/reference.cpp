#include "burgers/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace burgers {

// ---------------------------------------------------------------------------
// PwLinearExact

PwLinearExact PwLinearExact::from_knots(const std::vector<std::pair<double, double>>& knots) {
    PwLinearExact p;
    p.breakpoints.reserve(knots.size());
    for (const auto& [x, v] : knots) p.breakpoints.push_back({x, v, v, false});
    p.validate();
    return p;
}

void PwLinearExact::validate() const {
    if (breakpoints.empty()) throw ReferenceError("piecewise-linear profile needs at least one breakpoint");
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
        const Breakpoint& b = breakpoints[k];
        if (!(b.position >= 0.0 && b.position < 1.0)) {
            throw ReferenceError("breakpoint " + std::to_string(k) + " lies outside [0,1)");
        }
        if (k > 0 && !(b.position > breakpoints[k - 1].position)) {
            throw ReferenceError("breakpoints must be strictly increasing (zero-length segment at " +
                                 std::to_string(k) + ")");
        }
        if (!std::isfinite(b.value_left) || !std::isfinite(b.value_right)) {
            throw ReferenceError("non-finite breakpoint value");
        }
        if (b.is_shock && !(b.value_left > b.value_right)) {
            throw ReferenceError("shock at " + std::to_string(b.position) + " violates the entropy condition");
        }
        if (!b.is_shock && b.value_left != b.value_right) {
            throw ReferenceError("jump at " + std::to_string(b.position) + " is not marked as a shock");
        }
    }
}

namespace {

struct Segment {
    double xa, va, xb, vb;
    double slope() const { return (vb - va) / (xb - xa); }
};

Segment segment(const PwLinearExact& p, std::size_t k) {
    const auto& bp = p.breakpoints;
    const std::size_t m = bp.size();
    const Breakpoint& a = bp[k];
    const Breakpoint& b = bp[(k + 1) % m];
    const double xb = k + 1 < m ? b.position : b.position + 1.0;
    return {a.position, a.value_right, xb, b.value_left};
}

}  // namespace

double PwLinearExact::evaluate(double x) const noexcept {
    double s = x - std::floor(x);
    if (s >= 1.0) s = 0.0;
    const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), s,
                                     [](double v, const Breakpoint& b) { return v < b.position; });
    std::size_t k;
    if (it == breakpoints.begin()) {
        k = breakpoints.size() - 1;
        s += 1.0;
    } else {
        k = static_cast<std::size_t>(it - breakpoints.begin()) - 1;
    }
    // a sample sitting on a shock (up to round-off in its position) takes the mean state
    constexpr double kOnShock = 1e-12;
    const Breakpoint& b = breakpoints[k];
    if (b.is_shock && s - b.position <= kOnShock) return 0.5 * (b.value_left + b.value_right);
    const std::size_t kn = (k + 1) % breakpoints.size();
    const Breakpoint& nb = breakpoints[kn];
    const double next_pos = kn == 0 ? nb.position + 1.0 : nb.position;
    if (nb.is_shock && next_pos - s <= kOnShock) return 0.5 * (nb.value_left + nb.value_right);
    const Segment g = segment(*this, k);
    return g.va + (g.vb - g.va) * (s - g.xa) / (g.xb - g.xa);
}

double PwLinearExact::integral() const noexcept {
    double sum = 0.0;
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
        const Segment g = segment(*this, k);
        sum += 0.5 * (g.va + g.vb) * (g.xb - g.xa);
    }
    return sum;
}

double PwLinearExact::max_slope() const noexcept {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < breakpoints.size(); ++k) m = std::max(m, segment(*this, k).slope());
    return m;
}

double PwLinearExact::max_value() const noexcept {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& b : breakpoints) m = std::max({m, b.value_left, b.value_right});
    return m;
}

double PwLinearExact::min_value() const noexcept {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& b : breakpoints) m = std::min({m, b.value_left, b.value_right});
    return m;
}

std::size_t PwLinearExact::shock_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(breakpoints.begin(), breakpoints.end(), [](const Breakpoint& b) { return b.is_shock; }));
}

double shock_formation_time(const PwLinearExact& initial) {
    initial.validate();
    if (initial.shock_count() > 0) return 0.0;
    double steepest = 0.0;
    for (std::size_t k = 0; k < initial.breakpoints.size(); ++k) {
        steepest = std::max(steepest, -segment(initial, k).slope());
    }
    return steepest > 0.0 ? 1.0 / steepest : std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// characteristics

double characteristics_fixed_point(const ScalarFunction& u0, double x, double t, double tol) {
    if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
    if (!(t >= 0.0)) throw ConfigError("time must be non-negative");
    if (t == 0.0) return u0(x);

    auto g = [&](double u) { return u - u0(x - u * t); };

    // Every root is a value of u0, so it lies within the range of u0.
    constexpr int kSamples = 256;
    double lo = u0(0.0);
    double hi = lo;
    for (int k = 1; k < kSamples; ++k) {
        const double v = u0(static_cast<double>(k) / kSamples);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double pad = 0.05 * (hi - lo) + 1e-12 * (1.0 + std::abs(hi));
    lo -= pad;
    hi += pad;

    // More than one sign change means several characteristics reach (x, t).
    int changes = 0;
    double br_lo = lo, br_hi = hi;
    double prev_u = lo;
    double prev_g = g(lo);
    for (int k = 1; k <= kSamples; ++k) {
        const double u = lo + (hi - lo) * k / kSamples;
        const double gv = g(u);
        if ((prev_g < 0.0 && gv >= 0.0) || (prev_g > 0.0 && gv <= 0.0)) {
            ++changes;
            br_lo = prev_u;
            br_hi = u;
        }
        prev_u = u;
        prev_g = gv;
    }
    if (changes > 1) {
        throw ReferenceError("characteristics cross at x=" + std::to_string(x) + ", t=" + std::to_string(t) +
                             " (solution is past shock formation)");
    }

    double u = u0(x);
    double r = g(u);
    double theta = 1.0;
    for (int it = 0; it < 10'000; ++it) {
        if (std::abs(r) <= tol) return u;
        const double next = (1.0 - theta) * u + theta * u0(x - u * t);
        const double rn = g(next);
        if (std::abs(rn) >= std::abs(r)) {
            if (theta == 1.0) {
                theta = 0.5;
                continue;
            }
            break;  // damped iteration stalled
        }
        u = next;
        r = rn;
    }

    if (changes == 1) {
        double a = br_lo, b = br_hi;
        double ga = g(a);
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            const double gm = g(mid);
            if (std::abs(gm) <= tol) return mid;
            if (mid <= a || mid >= b) break;
            if ((gm < 0.0) == (ga < 0.0)) {
                a = mid;
                ga = gm;
            } else {
                b = mid;
            }
        }
    }
    throw ReferenceError("characteristics iteration did not converge at x=" + std::to_string(x) +
                         ", t=" + std::to_string(t));
}

// ---------------------------------------------------------------------------
// exact solution of piecewise-linear data
//
// u(x,t) = (x - y*)/t where y* minimizes Phi(y) = U0(y) + (x-y)^2/(2t) and U0 is
// a primitive of u0. The minimum over one linear piece is attained either at
// an end (a "fan" centred at the breakpoint) or at the foot of the
// characteristic through x, when the piece is still expanding (1 + b t > 0).
// Each candidate minimum is a quadratic in x and u is the derivative of the
// lower envelope, so shocks are where the winning candidate changes with a
// jump in slope.

namespace {

struct Candidate {
    int kind;   // 0 fan at a breakpoint, 1 piece interior
    int index;
    int shift;  // periodic copy
    double x0, P, Q, R;
    double lo, hi;

    double phi(double x) const { return P + Q * (x - x0) + R * (x - x0) * (x - x0); }
    double u(double x) const { return Q + 2.0 * R * (x - x0); }
    bool valid(double x) const { return x >= lo && x <= hi; }
    bool same(const Candidate& o) const { return kind == o.kind && index == o.index && shift == o.shift; }
};

void push_roots(const Candidate& c1, const Candidate& c2, std::vector<double>& out) {
    // difference in monomial form alpha x^2 + beta x + gamma
    const double alpha = c1.R - c2.R;
    const double beta = (c1.Q - 2.0 * c1.R * c1.x0) - (c2.Q - 2.0 * c2.R * c2.x0);
    const double gamma = (c1.P - c1.Q * c1.x0 + c1.R * c1.x0 * c1.x0) - (c2.P - c2.Q * c2.x0 + c2.R * c2.x0 * c2.x0);
    const double scale = std::abs(alpha) + std::abs(beta) + std::abs(gamma);
    if (scale == 0.0) return;
    if (std::abs(alpha) <= 1e-14 * scale) {
        if (beta != 0.0) out.push_back(-gamma / beta);
        return;
    }
    double disc = beta * beta - 4.0 * alpha * gamma;
    if (disc < 0.0) {
        if (disc < -1e-12 * beta * beta) return;
        disc = 0.0;
    }
    const double q = -0.5 * (beta + std::copysign(std::sqrt(disc), beta));
    out.push_back(q / alpha);
    if (q != 0.0) out.push_back(gamma / q);
}

}  // namespace

PwLinearExact front_tracking_solve(const PwLinearExact& initial, double t) {
    initial.validate();
    if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("time must be non-negative");
    if (t == 0.0) {
        PwLinearExact copy = initial;
        copy.time = 0.0;
        return copy;
    }

    const std::size_t m = initial.breakpoints.size();
    std::vector<Segment> seg(m);
    std::vector<double> prim(m + 1, 0.0);  // primitive from the first breakpoint
    for (std::size_t k = 0; k < m; ++k) {
        seg[k] = segment(initial, k);
        prim[k + 1] = prim[k] + 0.5 * (seg[k].va + seg[k].vb) * (seg[k].xb - seg[k].xa);
    }
    const double mean = prim[m];
    const double umax = initial.max_value();
    const double umin = initial.min_value();

    // feet y* lie in [x - umax t, x - umin t] for x in [0,1)
    const int p_lo = static_cast<int>(std::floor(-umax * t - 1.0)) - 1;
    const int p_hi = static_cast<int>(std::ceil(1.0 - umin * t)) + 1;
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<Candidate> cands;
    for (int p = p_lo; p <= p_hi; ++p) {
        for (std::size_t k = 0; k < m; ++k) {
            const Segment& s = seg[k];
            const double base = prim[k] + p * mean;
            cands.push_back({0, static_cast<int>(k), p, s.xa + p, base, 0.0, 0.5 / t, -inf, inf});
            const double b = s.slope();
            const double expand = 1.0 + b * t;
            if (expand > 0.0) {
                const double lo = s.xa + p + t * s.va;
                const double hi = s.xb + p + t * s.vb;
                if (hi < 0.0 || lo > 1.0) continue;
                cands.push_back({1, static_cast<int>(k), p, lo, base + 0.5 * t * s.va * s.va, s.va,
                                 b / (2.0 * expand), lo, hi});
            }
        }
    }

    std::vector<double> events{0.0, 1.0};
    for (const auto& c : cands) {
        if (c.kind == 1) {
            events.push_back(c.lo);
            events.push_back(c.hi);
        }
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
        for (std::size_t b = a + 1; b < cands.size(); ++b) push_roots(cands[a], cands[b], events);
    }
    events.erase(std::remove_if(events.begin(), events.end(),
                                [](double e) { return !(e >= 0.0 && e <= 1.0) || !std::isfinite(e); }),
                 events.end());
    std::sort(events.begin(), events.end());
    std::vector<double> cuts;
    for (double e : events) {
        if (cuts.empty() || e - cuts.back() > 1e-13) cuts.push_back(e);
    }
    cuts.back() = 1.0;

    struct Run {
        double start;
        std::size_t cand;
    };
    std::vector<Run> runs;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        double best_phi = inf;
        for (const auto& c : cands) {
            if (c.valid(mid)) best_phi = std::min(best_phi, c.phi(mid));
        }
        if (!std::isfinite(best_phi)) throw ReferenceError("no admissible characteristic foot found");
        // Candidates touching tangentially tie up to round-off over a sliver of
        // width ~sqrt(eps) around the contact. Among ties take a piece interior
        // over a fan and the running candidate over a new one, so no spurious
        // breakpoint is created there.
        const double tie = 1e-13 * (1.0 + std::abs(best_phi));
        std::size_t best = cands.size();
        auto rank = [&](std::size_t c) {
            return 2 * cands[c].kind + (!runs.empty() && cands[runs.back().cand].same(cands[c]) ? 1 : 0);
        };
        for (std::size_t c = 0; c < cands.size(); ++c) {
            if (!cands[c].valid(mid) || cands[c].phi(mid) > best_phi + tie) continue;
            if (best == cands.size() || rank(c) > rank(best)) best = c;
        }
        if (runs.empty() || !cands[runs.back().cand].same(cands[best])) runs.push_back({cuts[k], best});
    }

    // across x = 1 the same piece continues with its shift raised by one
    const Candidate& first = cands[runs.front().cand];
    const Candidate& last = cands[runs.back().cand];
    const bool wraps = last.kind == first.kind && last.index == first.index && last.shift == first.shift + 1;

    const double shock_tol = 1e-10 * (1.0 + std::max(std::abs(umax), std::abs(umin)));
    PwLinearExact out;
    out.time = t;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (r == 0 && wraps && runs.size() > 1) continue;
        const double x = runs[r].start;
        const Candidate& right = cands[runs[r].cand];
        const double ur = right.u(x);
        const double ul = r == 0 ? last.u(x + 1.0) : cands[runs[r - 1].cand].u(x);
        if (ul - ur > shock_tol) {
            out.breakpoints.push_back({x, ul, ur, true});
        } else if (ur - ul > shock_tol) {
            throw ReferenceError("expansion jump at x=" + std::to_string(x) + " in the exact solution");
        } else {
            const double v = 0.5 * (ul + ur);
            out.breakpoints.push_back({x, v, v, false});
        }
    }
    if (out.breakpoints.empty()) {
        // one piece wrapping the whole period: continuous and linear, hence constant
        const double v = first.u(0.0);
        out.breakpoints.push_back({0.0, v, v, false});
    }
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// sampling and default data

NodalField sample_reference(const PwLinearExact& ref, const Mesh& fine) {
    return interpolate([&](double x) { return ref.evaluate(x); }, fine);
}

NodalField sample_reference(const SmoothReference& ref, const Mesh& fine, double tol) {
    std::vector<double> v(fine.n_elems());
    const auto n = static_cast<std::ptrdiff_t>(v.size());
    bool failed = false;
    std::string message;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            v[i] = characteristics_fixed_point(ref.u0, fine.node(i), ref.time, tol);
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                message = e.what();
            }
        }
    }
    if (failed) throw ReferenceError(message);
    return NodalField(fine, std::move(v));
}

ScalarFunction smooth_default() {
    return [](double x) { return 0.25 * (std::cos(2.0 * std::numbers::pi * x) + 1.0); };
}

double smooth_default_derivative(double x) {
    return -0.5 * std::numbers::pi * std::sin(2.0 * std::numbers::pi * x);
}

PwLinearExact nonsmooth_default() { return PwLinearExact::from_knots({{0.0, 0.0}, {0.75, 1.0}}); }

}  // namespace burgers
