#include "hzeta/extrapolation.hpp"

#include "hzeta/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>

namespace hz {

namespace {
std::atomic<long> g_tail_n_max{2000000};
}

long default_tail_n_max() { return g_tail_n_max.load(); }

void set_default_tail_n_max(long n) {
    if (n < 100) throw DomainError("n_max must be at least 100");
    g_tail_n_max.store(n);
}


namespace {

// families whose exponents differ by a nonnegative integer are covered by the larger one
std::vector<HPReal> merge_families(std::vector<HPReal> s) {
    std::sort(s.begin(), s.end(), [](const HPReal& a, const HPReal& b) { return a > b; });
    std::vector<HPReal> out;
    for (const auto& x : s) {
        bool covered = false;
        for (const auto& y : out) {
            HPReal d = y - x;
            if (abs(d - round(d)) < HPReal(1e-20)) covered = true;
        }
        if (!covered) out.push_back(x);
    }
    return out;
}

// Householder least squares; columns are pre-scaled by their largest entry
HPReal least_squares_first(std::vector<std::vector<HPReal>> A, std::vector<HPReal> b) {
    const std::size_t rows = A.size(), cols = A[0].size();
    std::vector<HPReal> scale(cols, HPReal(0));
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) scale[c] = std::max(scale[c], HPReal(abs(A[r][c])));
        if (scale[c] == 0) scale[c] = 1;
        for (std::size_t r = 0; r < rows; ++r) A[r][c] /= scale[c];
    }
    for (std::size_t c = 0; c < cols; ++c) {
        HPReal norm = 0;
        for (std::size_t r = c; r < rows; ++r) norm += A[r][c] * A[r][c];
        norm = sqrt(norm);
        if (norm == 0) throw NoConvergence("extrapolation matrix is singular");
        const HPReal alpha = A[c][c] > 0 ? HPReal(-norm) : norm;
        std::vector<HPReal> v(rows, HPReal(0));
        for (std::size_t r = c; r < rows; ++r) v[r] = A[r][c];
        v[c] -= alpha;
        HPReal vnorm2 = 0;
        for (std::size_t r = c; r < rows; ++r) vnorm2 += v[r] * v[r];
        if (vnorm2 == 0) continue;
        for (std::size_t cc = c; cc < cols; ++cc) {
            HPReal dot = 0;
            for (std::size_t r = c; r < rows; ++r) dot += v[r] * A[r][cc];
            const HPReal f = 2 * dot / vnorm2;
            for (std::size_t r = c; r < rows; ++r) A[r][cc] -= f * v[r];
        }
        HPReal dot = 0;
        for (std::size_t r = c; r < rows; ++r) dot += v[r] * b[r];
        const HPReal f = 2 * dot / vnorm2;
        for (std::size_t r = c; r < rows; ++r) b[r] -= f * v[r];
    }
    std::vector<HPReal> x(cols, HPReal(0));
    for (std::size_t c = cols; c-- > 0;) {
        HPReal s = b[c];
        for (std::size_t cc = c + 1; cc < cols; ++cc) s -= A[c][cc] * x[cc];
        x[c] = s / A[c][c];
    }
    return x[0] / scale[0];
}

struct GridSums {
    std::vector<long> grid;  // strictly increasing sample points
    std::vector<HPReal> sums;
    long n = 0;
    HPReal running = 0;
    HPReal last_term = 0;
};

std::vector<long> make_grid(long n_max) {
    std::vector<long> g;
    double x = 8;
    while (true) {
        long v = static_cast<long>(std::ceil(x));
        if (v > n_max) break;
        if (g.empty() || v > g.back()) g.push_back(v);
        x *= 1.09;
    }
    return g;
}

int unknowns(int families, int orders, int log_power) { return 1 + families * orders * (log_power + 1); }

}  // namespace

HPReal extrapolate_limit(const std::vector<long>& ns, const std::vector<HPReal>& values,
                         const SeriesShape& shape, int orders) {
    const auto fam = merge_families(shape.sigmas);
    const int cols = unknowns(static_cast<int>(fam.size()), orders, shape.log_power);
    if (static_cast<int>(ns.size()) < cols) throw NoConvergence("too few samples for extrapolation");
    std::vector<std::vector<HPReal>> A;
    for (long N : ns) {
        std::vector<HPReal> row{HPReal(1)};
        const HPReal hn(N);
        const HPReal L = log(hn);
        for (const auto& s : fam) {
            for (int i = 0; i < orders; ++i) {
                HPReal base = pow(hn, s - i);
                for (int j = 0; j <= shape.log_power; ++j) {
                    row.push_back(base);
                    base *= L;
                }
            }
        }
        A.push_back(std::move(row));
    }
    return least_squares_first(std::move(A), values);
}

ValueWithBound sum_extrapolated(const TermFn& term, const SeriesShape& shape, const HPReal& tol,
                                const TailStrategy& strategy) {
    if (shape.sigmas.empty()) throw DomainError("series shape needs at least one exponent");
    for (const auto& s : shape.sigmas)
        if (!(s < 0)) throw DomainError("series does not converge (tail exponent " + to_decimal(s, 6) + ")");
    const int fam = static_cast<int>(merge_families(shape.sigmas).size());
    GridSums g;
    g.grid = make_grid(strategy.n_max);

    auto extend_to = [&](std::size_t idx) {
        while (g.sums.size() <= idx) {
            const long target = g.grid[g.sums.size()];
            while (g.n < target) {
                ++g.n;
                g.last_term = term(g.n);
                g.running += g.last_term;
            }
            g.sums.push_back(g.running);
        }
    };

    HPReal prev_value = 0, best_value = 0, best_err = -1;
    bool have_prev = false;
    for (int orders = 2;; ++orders) {
        const int m = unknowns(fam, orders, shape.log_power);
        const std::size_t len = static_cast<std::size_t>(m + 3);
        const long n_low = 4L * orders * (shape.log_power + 1);
        std::size_t start = 0;
        while (start < g.grid.size() && g.grid[start] < n_low) ++start;
        const std::size_t end = start + len;
        if (end > g.grid.size()) break;
        extend_to(end - 1);
        std::vector<long> ns(g.grid.begin() + start, g.grid.begin() + end);
        std::vector<HPReal> vs(g.sums.begin() + start, g.sums.begin() + end);
        HPReal v = extrapolate_limit(ns, vs, shape, orders);
        if (have_prev) {
            HPReal err = abs(v - prev_value);
            if (best_err < 0 || err < best_err) {
                best_err = err;
                best_value = v;
            }
            if (err <= tol) return {v, err, false};
            // estimates have stopped improving
            if (orders > 6 && err > 1e6 * best_err) break;
        }
        prev_value = v;
        have_prev = true;
    }
    if (best_err < 0) throw ToleranceNotReached("series: not enough terms below n_max", g.running, abs(g.last_term));
    throw ToleranceNotReached("series: tolerance not reached (best error " + to_sci(best_err, 2) + ")",
                              best_value, best_err);
}

ValueWithBound sum_direct(const TermFn& term, const TailBoundFn& bound, const HPReal& tol,
                          const TailStrategy& strategy) {
    HPReal s = 0;
    for (long n = 1; n <= strategy.n_max; ++n) {
        const HPReal t = term(n);
        s += t;
        if (n >= 4) {
            HPReal b = bound(n, t);
            if (b >= 0 && b <= tol) return {s, b, true};
        }
    }
    throw ToleranceNotReached("direct summation: tail bound above tolerance at n_max", s,
                              bound(strategy.n_max, term(strategy.n_max)));
}

}  // namespace hz
