#pragma once

#include "hzeta/compositions.hpp"
#include "hzeta/extrapolation.hpp"
#include "hzeta/finite_sums.hpp"
#include "hzeta/hpreal.hpp"
#include "hzeta/value.hpp"

namespace hz {

// zeta(k; a) and zeta*(k; a) with per-slot shifts
ValueWithBound htmzv(const Composition& k, const ShiftVector& a, const HPReal& tol,
                     const TailStrategy& strategy = {});
ValueWithBound htmzsv(const Composition& k, const ShiftVector& a, const HPReal& tol,
                      const TailStrategy& strategy = {});
ValueWithBound htmzv(const Composition& k, const HPReal& a, const HPReal& tol, const TailStrategy& strategy = {});
ValueWithBound htmzsv(const Composition& k, const HPReal& a, const HPReal& tol, const TailStrategy& strategy = {});

// T(k; alpha); alpha = 1 gives the Kaneko-Tsumura T-values
ValueWithBound htmtv(const Composition& k, const HPReal& alpha, const HPReal& tol,
                     const TailStrategy& strategy = {});

// single-variable multiple polylogarithm, 0 <= x <= 1
ValueWithBound mpl(const Composition& k, const HPReal& x, const HPReal& tol, const TailStrategy& strategy = {});
// Li_k(1 - s), s given directly so that points near 1 keep full accuracy
ValueWithBound mpl_complement(const Composition& k, const HPReal& s, const HPReal& tol);
// Li_k(x/(x-1)), 0 <= x < 1
ValueWithBound mpl_landen(const Composition& k, const HPReal& x, const HPReal& tol,
                          const TailStrategy& strategy = {});
ValueWithBound mpl_landen_complement(const Composition& k, const HPReal& s, const HPReal& tol);
// Kaneko-Tsumura A-function, 0 <= x <= 1
ValueWithBound kta(const Composition& k, const HPReal& x, const HPReal& tol, const TailStrategy& strategy = {});
// A(k; x) at x = (1-u)/(1+u)
ValueWithBound kta_from_u(const Composition& k, const HPReal& u, const HPReal& tol);

// sum zeta_{n-1}(k_2..k_r) zeta*_n({1}_kk; 1-alpha) / (n^{k_1+1} binom(n-alpha, n))
ValueWithBound apery_I(const Composition& k, int kk, const HPReal& alpha, const HPReal& tol,
                       const TailStrategy& strategy = {});
// sum binom(n+alpha-1, n) zeta_n({1}_kh; alpha) zeta*_n(star_tail) / n^m
ValueWithBound apery_II(int k_head, const Composition& star_tail, int m, const HPReal& alpha, const HPReal& tol,
                        const TailStrategy& strategy = {});
// sum zeta_n(k; alpha) zeta*_n(l; 1-beta) / n^{m+2} * binom(n+alpha-1, n) / binom(n-beta, n)
ValueWithBound apery_III(const Composition& k, const Composition& l, int m, const HPReal& alpha,
                         const HPReal& beta, const HPReal& tol, const TailStrategy& strategy = {});

// sum zeta_{n-1}({1}_m) / ((n+a)(n+b))
ValueWithBound param_euler_sum(int m, const HPReal& a, const HPReal& b, const HPReal& tol,
                               const TailStrategy& strategy = {});
// sum zeta_{n-1}({1}_m) / (n+alpha)^{k+1}
ValueWithBound param_euler_pow(int m, int k, const HPReal& alpha, const HPReal& tol,
                               const TailStrategy& strategy = {});

enum class AKKind { xi, psi, eta };
// xi/psi/eta at the integer point s, through the finite zeta (T, zeta-star) combination
ValueWithBound arakawa_kaneko(AKKind kind, int s, const Composition& k, const HPReal& tol,
                              const TailStrategy& strategy = {});

// zeta^(alpha)(k; beta) = sum_{n_1>...>n_r>0} binom(n_r+alpha-2, n_r-1) / prod (n_j+beta-1)^{k_j}
ValueWithBound htmzv_pbc(const HPReal& alpha, const Composition& k, const HPReal& beta, const HPReal& tol,
                         const TailStrategy& strategy = {});

// (1/l!) d^l/dalpha^l zeta^(alpha)(k; beta): the innermost weight becomes binom(n_r+alpha-2, n_r-1) zeta_{n_r-1}({1}_l; alpha)
ValueWithBound htmzv_pbc_dalpha(const HPReal& alpha, int l, const Composition& k, const HPReal& beta,
                                const HPReal& tol, const TailStrategy& strategy = {});

// drops every memoised constant (tests use this to force recomputation)
void clear_series_cache();

}  // namespace hz
