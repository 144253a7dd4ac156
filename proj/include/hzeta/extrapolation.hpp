#pragma once

#include "hzeta/hpreal.hpp"
#include "hzeta/value.hpp"

#include <functional>
#include <vector>

namespace hz {

// process-wide default for TailStrategy::n_max (the CLI flag sets it)
long default_tail_n_max();
void set_default_tail_n_max(long n);

struct TailStrategy {
    enum class Kind { direct_bound, euler_maclaurin, richardson };
    Kind kind = Kind::richardson;
    long n_max = default_tail_n_max();
    int em_order = 8;
};

// Partial sums S_N behave like S + sum_{sigma} sum_{i>=0} sum_{j<=log_power} c N^{sigma-i} log^j N.
struct SeriesShape {
    std::vector<HPReal> sigmas;
    int log_power = 0;
};

// term(n) is called for n = 1, 2, ... in order
using TermFn = std::function<HPReal(long)>;
// rigorous bound on |sum_{m>n} term(m)| given the terms seen so far
using TailBoundFn = std::function<HPReal(long n, const HPReal& last_term)>;

// Log-aware generalised Richardson extrapolation of the partial sums.
ValueWithBound sum_extrapolated(const TermFn& term, const SeriesShape& shape, const HPReal& tol,
                                const TailStrategy& strategy = {});

// Plain summation until the supplied tail bound drops below tol.
ValueWithBound sum_direct(const TermFn& term, const TailBoundFn& bound, const HPReal& tol,
                          const TailStrategy& strategy = {});

// Least-squares limit of a sequence sampled at the given N values.
HPReal extrapolate_limit(const std::vector<long>& ns, const std::vector<HPReal>& values,
                         const SeriesShape& shape, int orders);

}  // namespace hz
