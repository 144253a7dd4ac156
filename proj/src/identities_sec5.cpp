// Apery-type series with two parametric binomial coefficients
#include "identities_common.hpp"

#include <memory>

namespace hz::ids {

namespace {

HPReal half() { return HPReal(1) / 2; }

// sum binom(n+a-1,n) zeta_n({1}_k; a) / n^j
ValueWithBound P(int k, int j, const HPReal& a, const HPReal& tol) { return apery_II(k, Composition(), j, a, tol); }

ValueWithBound mzv(const Composition& k, const HPReal& tol) {
    if (k.empty()) return ValueWithBound::exact(HPReal(1));
    return htmzv(k, HPReal(1), tol);
}

struct Mkp {
    int m, k, p;
};

Mkp read_mkp(const Params& prm, int m_min, int k_min, int p_min) {
    Mkp s{int_param(prm, "m"), int_param(prm, "k"), int_param(prm, "p")};
    require(s.m >= m_min, "m", "must be >= " + std::to_string(m_min));
    require(s.k >= k_min, "k", "must be >= " + std::to_string(k_min));
    require(s.p >= p_min, "p", "must be >= " + std::to_string(p_min));
    return s;
}

void require_ab(const HPReal& alpha, const HPReal& beta, int m) {
    require(alpha < 1 && !(is_integer(alpha) && alpha <= 0), "alpha", "must be < 1 and not 0 or a negative integer");
    require(beta < 1 && !(is_integer(beta) && beta <= 0), "beta", "must be < 1 and not 0 or a negative integer");
    require(alpha + beta < m + 2, "alpha", "needs alpha + beta < m + 2 for convergence");
}

// left side minus right side ingredients of the differentiated duality, at (alpha, beta)
ValueWithBound thm54_lhs(const Mkp& s, const HPReal& alpha, const HPReal& beta, const HPReal& tol) {
    const HPReal t = tol / 4;
    Combination c;
    c.add(HPReal(1), apery_III(Composition::ones(s.k), Composition::ones(s.p), s.m, alpha, beta, t));
    c.add(sign(s.m), apery_III(Composition::ones(s.p), Composition::ones(s.k), s.m, beta, alpha, t));
    if (s.p == 0) c.add(HPReal(-1), P(s.k, s.m + 2, alpha, t));
    if (s.k == 0) c.add(-sign(s.m), P(s.p, s.m + 2, beta, t));
    return c.total;
}

ValueWithBound thm54_rhs(const Mkp& s, const HPReal& alpha, const HPReal& beta, const HPReal& tol) {
    Combination c;
    const HPReal t = tol / (2 * (s.m + 2));
    for (int i = 1; i <= s.m + 1; ++i) c.add(sign(i - 1), P(s.p, i, beta, t) * P(s.k, s.m + 2 - i, alpha, t));
    return c.total;
}

// sum zeta_{n-1}({1}_{k-1}) t*_n({1}_p) / n^{m+3} * 4^n / binom(2n,n)
ValueWithBound central_star_series(int m, int k, int p, const HPReal& tol) {
    struct State {
        OnesTracker low, star;
        HPReal inv_c = 1;
        State(int k, int p) : low(HPReal(1), k - 1), star(half(), p) {}
    };
    auto st = std::make_shared<State>(k, p);
    const HPReal scale = pow_int(HPReal(2), -p);
    TermFn term = [=](long n) -> HPReal {
        const HPReal lower = st->low.plain(k - 1);
        st->low.advance();
        st->star.advance();
        st->inv_c *= HPReal(n) / (HPReal(n) - half());
        return lower * st->star.star(p) * scale * st->inv_c * pow_int(HPReal(n), -(m + 3));
    };
    return sum_extrapolated(term, SeriesShape{{HPReal(-m - 2) + half()}, k - 1 + p}, tol);
}

// t(idx) = 2^{-|idx|} zeta(idx; 1/2)
ValueWithBound t_value(const Composition& idx, const HPReal& tol) {
    return pow_int(HPReal(2), -idx.weight()) * htmzv(idx, half(), tol / pow_int(HPReal(2), -idx.weight()));
}

// i = (i_1, ..., i_{m+2}), returns (i_2+1, ..., i_{m+2}+1)
Composition tail_plus_one(const WeakComposition& i) {
    std::vector<int> v;
    for (int j = 1; j < i.size(); ++j) v.push_back(i[j] + 1);
    return Composition(std::move(v));
}

// sum_N t_N(idx) f(N), f(N) = N^{-s} or N^{-s} - (N+1/2)^{-s}
ValueWithBound t_weighted_series(const Composition& idx, int s, bool difference, const HPReal& tol) {
    auto ns = std::make_shared<NestedSum>(NestedSum::powers(idx, ShiftVector::constant(half(), idx.depth()), false));
    const HPReal scale = pow_int(HPReal(2), -idx.weight());
    TermFn term = [=](long n) -> HPReal {
        ns->advance();
        const HPReal v = ns->value();
        if (v == 0) return HPReal(0);
        HPReal f = pow_int(HPReal(n), -s);
        if (difference) f -= pow_int(HPReal(n) + half(), -s);
        return scale * v * f;
    };
    const int decay = difference ? s + 1 : s;
    return sum_extrapolated(term, SeriesShape{{HPReal(1 - decay)}, idx.depth()}, tol);
}

// sum_n zeta_{n-1}(idx) (1/(n-1/2) - 1/n)
ValueWithBound shifted_difference_series(const Composition& idx, const HPReal& tol) {
    auto ns = std::make_shared<NestedSum>(NestedSum::powers(idx, ShiftVector::constant(HPReal(1), idx.depth()), false));
    TermFn term = [=](long n) -> HPReal {
        const HPReal v = ns->value();
        ns->advance();
        if (v == 0) return HPReal(0);
        return v * (1 / (HPReal(n) - half()) - HPReal(1) / n);
    };
    return sum_extrapolated(term, SeriesShape{{HPReal(-1)}, idx.depth()}, tol);
}

}  // namespace

void register_sec5(Registry& r) {
    r.add({"thm-5.2",
           "sum binom(n+a-1,n)/(n^{m+2} binom(n-b,n)) + (-1)^m (a<->b) - sum binom(n+a-1,n)/n^{m+2} - (-1)^m (b) "
           "= sum_i (-1)^{i-1} P(b,i) P(a,m+2-i)",
           false,
           make_samples({"m", "alpha", "beta"}, {{"-1", "1/2", "1/2"},
                                                  {"0", "1/2", "1/2"},
                                                  {"1", "1/2", "1/2"},
                                                  {"2", "1/2", "1/2"},
                                                  {"0", "1/4", "1/3"},
                                                  {"1", "0.3", "-0.5"},
                                                  {"-1", "0.2", "0.3"},
                                                  {"2", "-1/3", "0.6"}}),
           [](const Params& prm) {
               const int m = int_param(prm, "m");
               const HPReal alpha = real_param(prm, "alpha");
               const HPReal beta = real_param(prm, "beta");
               require(m >= -1, "m", "must be >= -1");
               const bool cancels = m % 2 != 0 && alpha == beta;
               if (cancels) require(alpha < 1 && !(is_integer(alpha) && alpha <= 0), "alpha",
                                    "must be < 1 and not 0 or a negative integer");
               else require_ab(alpha, beta, m);
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const Mkp s{m, 0, 0};
                   ValueWithBound lhs;
                   std::string note;
                   if (cancels) {
                       // odd m at alpha = beta: the four series cancel pairwise, term by term
                       lhs = ValueWithBound::exact(HPReal(0));
                       note = "odd m, alpha = beta: left side cancels termwise";
                   } else {
                       lhs = thm54_lhs(s, alpha, beta, t / 2);
                   }
                   return RouteSides{lhs, thm54_rhs(s, alpha, beta, t / 2), note};
               })};
           }});

    r.add({"cor-5.3",
           "(1+(-1)^m) zeta(m+2) = sum_i (-1)^{i-1} c_i c_{m+2-i} + (1+(-1)^m) c_{m+2}, c_j = sum binom(2n,n)/(n^j 4^n)", false,
           make_samples({"m"}, {{"-1"}, {"0"}, {"1"}, {"2"}, {"3"}, {"4"}}),
           [](const Params& prm) {
               const int m = int_param(prm, "m");
               require(m >= -1, "m", "must be >= -1");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const HPReal tt = t / (2 * (m + 3));
                   auto c = [&](int j) { return P(0, j, half(), tt); };
                   Combination rhs;
                   for (int i = 1; i <= m + 1; ++i) rhs.add(sign(i - 1), c(i) * c(m + 2 - i));
                   ValueWithBound lhs = ValueWithBound::exact(HPReal(0));
                   std::string note;
                   if (m % 2 == 0) {
                       lhs = rounded(2 * zeta_int(m + 2));
                       rhs.add(HPReal(2), c(m + 2));
                   } else {
                       note = "odd m: the zeta(m+2) and c_{m+2} terms carry the factor 1+(-1)^m = 0";
                   }
                   return RouteSides{lhs, rhs.total, note};
               })};
           }});

    r.add({"thm-5.4", "k-th alpha and p-th beta derivative of the two-binomial duality", false,
           make_samples({"m", "k", "p", "alpha", "beta"}, {{"0", "1", "1", "1/4", "1/3"},
                                                           {"1", "1", "0", "0.3", "-0.5"},
                                                           {"-1", "1", "1", "0.2", "0.3"},
                                                           {"2", "2", "1", "-1/3", "2/5"},
                                                           {"0", "0", "2", "1/2", "1/4"},
                                                           {"1", "2", "2", "1/4", "1/4"}}),
           [](const Params& prm) {
               const Mkp s = read_mkp(prm, -1, 0, 0);
               const HPReal alpha = real_param(prm, "alpha");
               const HPReal beta = real_param(prm, "beta");
               require_ab(alpha, beta, s.m);
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   return RouteSides{thm54_lhs(s, alpha, beta, t / 2), thm54_rhs(s, alpha, beta, t / 2), ""};
               })};
           }});

    r.add({"cor-5.5",
           "sum zeta_{n-1}({1}_{k-1}) zeta*_n({1}_p)/n^{m+3} + (-1)^m (k<->p) = sum_i (-1)^{i-1} zeta(i+1,{1}_{p-1}) "
           "zeta(m+3-i,{1}_{k-1})",
           false,
           make_samples({"m", "k", "p"}, {{"0", "1", "1"}, {"1", "1", "2"}, {"-1", "1", "1"}, {"2", "2", "1"}, {"0", "2", "2"},
                                          {"-1", "2", "1"}}),
           [](const Params& prm) {
               const Mkp s = read_mkp(prm, -1, 1, 1);
               auto rhs = [s](const HPReal& t) {
                   Combination c;
                   const HPReal tt = t / (2 * (s.m + 2));
                   for (int i = 1; i <= s.m + 1; ++i)
                       c.add(sign(i - 1), mzv(Composition{i + 1}.concat(Composition::ones(s.p - 1)), tt) *
                                              mzv(Composition{s.m + 3 - i}.concat(Composition::ones(s.k - 1)), tt));
                   return c.total;
               };
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    Combination lhs;
                                    lhs.add(HPReal(1), ky_sum(Composition::ones(s.k - 1), Composition::ones(s.p), s.m + 3, t / 4));
                                    lhs.add(sign(s.m), ky_sum(Composition::ones(s.p - 1), Composition::ones(s.k), s.m + 3, t / 4));
                                    return RouteSides{lhs.total, rhs(t / 2), ""};
                                }),
                   quad_route("limit", [=](const HPReal& t) {
                       std::string note;
                       const ValueWithBound lim =
                           limit_at_zero([&](const HPReal& e) { return thm54_lhs(s, e, e, t / 10); }, note);
                       return RouteSides{lim, rhs(t / 2), note};
                   })};
           }});

    r.add({"cor-5.6",
           "sum zeta_{n-1}({1}_{k-1}) t*_n({1}_p) 4^n/(n^{m+3} binom(2n,n)) + (-1)^m sum t_n({1}_p) zeta*_n({1}_k) "
           "binom(2n,n)/(n^{m+2} 4^n) - delta_{0,p} zeta(m+3,{1}_{k-1}) = sum_i (-1)^{i-1} (...) zeta(m+3-i,{1}_{k-1})",
           false,
           make_samples({"m", "k", "p"}, {{"0", "1", "1"}, {"-1", "1", "0"}, {"1", "1", "1"}, {"0", "2", "0"}, {"-1", "1", "1"},
                                          {"1", "2", "1"}}),
           [](const Params& prm) {
               const Mkp s = read_mkp(prm, -1, 1, 0);
               const HPReal scale = pow_int(HPReal(2), -s.p);
               auto rhs = [s, scale](const HPReal& t) {
                   Combination c;
                   const HPReal tt = t / (2 * (s.m + 2));
                   for (int i = 1; i <= s.m + 1; ++i)
                       c.add(sign(i - 1) * scale,
                             P(s.p, i, half(), tt) * mzv(Composition{s.m + 3 - i}.concat(Composition::ones(s.k - 1)), tt));
                   return c.total;
               };
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    const HPReal tt = t / 8;
                                    Combination lhs;
                                    lhs.add(HPReal(1), central_star_series(s.m, s.k, s.p, tt));
                                    lhs.add(sign(s.m) * scale, apery_III(Composition::ones(s.p), Composition::ones(s.k), s.m,
                                                                         half(), HPReal(0), tt));
                                    if (s.p == 0)
                                        lhs.add(HPReal(-1), mzv(Composition{s.m + 3}.concat(Composition::ones(s.k - 1)), tt));
                                    return RouteSides{lhs.total, rhs(t / 2), ""};
                                }),
                   quad_route("limit", [=](const HPReal& t) {
                       std::string note;
                       const ValueWithBound lim = limit_at_zero(
                           [&](const HPReal& e) { return scale * thm54_lhs(s, e, half(), t / 10); }, note);
                       return RouteSides{lim, rhs(t / 2), note};
                   })};
           }});

    r.add({"thm-5.7", "sum binom(n+a-1,n)/(n^{m+2} binom(n-b,n)) = a sum zeta_{n-1}({1}_{m+1};1-b)/((n-b-a)(n-b))", false,
           make_samples({"m", "alpha", "beta"}, {{"0", "1/4", "1/3"},
                                                 {"-1", "0.3", "0.2"},
                                                 {"1", "-0.5", "1/2"},
                                                 {"2", "0.9", "-0.4"},
                                                 {"0", "-1/3", "0.6"},
                                                 {"1", "1/2", "1/2"}}),
           [](const Params& prm) {
               const int m = int_param(prm, "m");
               const HPReal alpha = real_param(prm, "alpha");
               const HPReal beta = real_param(prm, "beta");
               require(m >= -1, "m", "must be >= -1");
               require_ab(alpha, beta, m);
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   return RouteSides{apery_III(Composition(), Composition(), m, alpha, beta, t),
                                     alpha * shifted_pair_sum(Composition::ones(m + 1), alpha, beta, t / abs(alpha)), ""};
               })};
           }});

    r.add({"thm-5.8",
           "sum zeta_n({1}_k;a) zeta*_n({1}_p;1-b) binom(n+a-1,n)/(n^{m+2} binom(n-b,n)) = binomial sum of "
           "zeta(i_1+k+1,i_2+1,..;1-a-b,{1-b}_{m+1}) - delta_{0,k} zeta(..;{1-b}_{m+2})",
           false,
           make_samples({"m", "k", "p", "alpha", "beta"}, {{"0", "1", "1", "1/4", "1/3"},
                                                           {"-1", "0", "1", "0.3", "0.2"},
                                                           {"1", "0", "0", "-0.5", "1/2"},
                                                           {"0", "2", "1", "2/5", "-0.3"},
                                                           {"1", "1", "2", "1/3", "1/4"},
                                                           {"-1", "1", "0", "0.2", "0.3"},
                                                           {"0", "0", "2", "1/4", "1/2"}}),
           [](const Params& prm) {
               const Mkp s = read_mkp(prm, -1, 0, 0);
               const HPReal alpha = real_param(prm, "alpha");
               const HPReal beta = real_param(prm, "beta");
               require_ab(alpha, beta, s.m);
               require(!(is_integer(alpha + beta) && alpha + beta >= 1), "alpha", "alpha + beta must not be a positive integer");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const auto is = weak_compositions(s.p, s.m + 2);
                   const HPReal tt = t / (4 * static_cast<long>(is.size()) * (s.p + s.k + 1));
                   Combination rhs;
                   for (const auto& i : is) {
                       const Composition tail = tail_plus_one(i);
                       const HPReal coef = big(binomial(i[0] + s.k, s.k));
                       if (i[0] == 0 && s.k == 0) {
                           rhs.add(coef * alpha, shifted_pair_sum(tail, alpha, beta, tt / abs(alpha)));
                           continue;
                       }
                       const Composition idx = Composition{i[0] + s.k + 1}.concat(tail);
                       std::vector<HPReal> shifts(idx.depth(), 1 - beta);
                       shifts[0] = 1 - alpha - beta;
                       rhs.add(coef, htmzv(idx, ShiftVector(shifts), tt));
                       if (s.k == 0) rhs.add(-coef, htmzv(idx, 1 - beta, tt));
                   }
                   return RouteSides{apery_III(Composition::ones(s.k), Composition::ones(s.p), s.m, alpha, beta, t / 2),
                                     rhs.total, ""};
               })};
           }});

    r.add({"cor-5.9",
           "sum zeta_{n-1}({1}_{k-1}) t*_n({1}_p) 4^n/(n^{m+3} binom(2n,n)) = 2^{k+m+2} sum binom(i_1+k,k) "
           "t(i_1+k+1,i_2+1,..)",
           false,
           make_samples({"m", "k", "p"}, {{"0", "1", "1"}, {"-1", "1", "0"}, {"1", "1", "1"}, {"0", "2", "0"}, {"-1", "2", "1"},
                                          {"1", "1", "0"}}),
           [](const Params& prm) {
               const Mkp s = read_mkp(prm, -1, 1, 0);
               auto rhs = [s](const HPReal& t) {
                   const auto is = weak_compositions(s.p, s.m + 2);
                   const HPReal pre = pow_int(HPReal(2), s.k + s.m + 2);
                   const HPReal tt = t / (pre * static_cast<long>(is.size()) * (s.p + s.k + 1));
                   Combination c;
                   for (const auto& i : is)
                       c.add(pre * big(binomial(i[0] + s.k, s.k)),
                             t_value(Composition{i[0] + s.k + 1}.concat(tail_plus_one(i)), tt));
                   return c.total;
               };
               const HPReal scale = pow_int(HPReal(2), -s.p);
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    return RouteSides{central_star_series(s.m, s.k, s.p, t / 2), rhs(t / 2), ""};
                                }),
                   quad_route("limit", [=](const HPReal& t) {
                       std::string note;
                       const ValueWithBound lim = limit_at_zero(
                           [&](const HPReal& e) {
                               return scale * apery_III(Composition::ones(s.k), Composition::ones(s.p), s.m, e, half(), t / 10);
                           },
                           note);
                       return RouteSides{lim, rhs(t / 2), note};
                   })};
           }});

    r.add({"cor-5.10",
           "2^{k+p} sum t_n({1}_k) t*_n({1}_p)/n^{m+2} = sum 2^{p-i_1+m+1} binom(i_1+k,k) sum_N t_N(i_2+1,..) f(N), "
           "f = N^{-(i_1+k+1)} (k >= 1) or N^{-(i_1+1)} - (N+1/2)^{-(i_1+1)} (k = 0)",
           false,
           make_samples({"m", "k", "p"}, {{"0", "1", "1"}, {"0", "0", "1"}, {"1", "1", "0"}, {"1", "0", "2"}, {"0", "2", "1"},
                                          {"2", "1", "1"}, {"0", "0", "0"}}),
           [](const Params& prm) {
               const Mkp s = read_mkp(prm, 0, 0, 0);
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const auto is = weak_compositions(s.p, s.m + 2);
                   const HPReal tt = t / (2 * static_cast<long>(is.size()) * pow_int(HPReal(2), s.p + s.m + 1) * (s.p + s.k + 1));
                   Combination rhs;
                   for (const auto& i : is) {
                       const HPReal coef = pow_int(HPReal(2), s.p - i[0] + s.m + 1) * big(binomial(i[0] + s.k, s.k));
                       const Composition tail = tail_plus_one(i);
                       if (s.k >= 1) rhs.add(coef, t_weighted_series(tail, i[0] + s.k + 1, false, tt));
                       else rhs.add(coef, t_weighted_series(tail, i[0] + 1, true, tt));
                   }
                   return RouteSides{apery_III(Composition::ones(s.k), Composition::ones(s.p), s.m, half(), half(), t / 2),
                                     rhs.total, ""};
               })};
           }});

    r.add({"cor-5.11",
           "2^k sum t_n({1}_k) zeta*_n({1}_p) binom(2n,n)/(n^{m+2} 4^n) = sum binom(i_1+k,k) sum zeta_{n-1}(i_2+1,..) g(n), "
           "g = (n-1/2)^{-(i_1+k+1)} (k >= 1) or (n-1/2)^{-(i_1+1)} - n^{-(i_1+1)} (k = 0)",
           false,
           make_samples({"m", "k", "p"}, {{"0", "1", "1"}, {"-1", "1", "0"}, {"1", "1", "1"}, {"0", "2", "0"}, {"0", "0", "1"},
                                          {"-1", "0", "2"}, {"1", "0", "0"}}),
           [](const Params& prm) {
               const Mkp s = read_mkp(prm, -1, 0, 0);
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const auto is = weak_compositions(s.p, s.m + 2);
                   const HPReal tt = t / (4 * static_cast<long>(is.size()) * (s.p + s.k + 1));
                   Combination rhs;
                   for (const auto& i : is) {
                       const HPReal coef = big(binomial(i[0] + s.k, s.k));
                       const Composition tail = tail_plus_one(i);
                       const Composition idx = Composition{i[0] + s.k + 1}.concat(tail);
                       std::vector<HPReal> shifts(idx.depth(), HPReal(1));
                       shifts[0] = half();
                       if (s.k == 0 && i[0] == 0) {
                           rhs.add(coef, shifted_difference_series(tail, tt));
                           continue;
                       }
                       rhs.add(coef, htmzv(idx, ShiftVector(shifts), tt));
                       if (s.k == 0) rhs.add(-coef, htmzv(idx, HPReal(1), tt));
                   }
                   return RouteSides{apery_III(Composition::ones(s.k), Composition::ones(s.p), s.m, half(), HPReal(0), t / 2),
                                     rhs.total, ""};
               })};
           }});
}

}  // namespace hz::ids
