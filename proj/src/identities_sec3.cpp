// Apery-type series with one parametric binomial coefficient
#include "identities_common.hpp"

#include <memory>

namespace hz::ids {

namespace {

HPReal hz2(const HPReal& a) { return hurwitz_zeta(2, a); }

ValueWithBound zeta_at(const Composition& k, const HPReal& a, const HPReal& tol) { return htmzv(k, a, tol); }

// sum_j (A + jB)^k r^j for j >= 1, summed until the terms are negligible
HPReal poly_geometric(const HPReal& A, const HPReal& B, int k, const HPReal& r) {
    HPReal s = 0;
    HPReal rj = r;
    for (long j = 1;; ++j, rj *= r) {
        const HPReal t = pow_int(A + B * j, k) * rj;
        s += t;
        if (j > 8 && t < s * epsilon()) break;
    }
    return s;
}

ValueWithBound genfun_partial_sum(const HPReal& x, const HPReal& alpha, int k, const HPReal& tol) {
    struct State {
        HPReal c = 1;  // binom(n+alpha-1, n)
        HPReal abs_sum = 0;  // sum_{i<=n} 1/|i+alpha-1|
        std::unique_ptr<OnesTracker> ones;
    };
    auto st = std::make_shared<State>();
    st->ones = std::make_unique<OnesTracker>(alpha, k);
    const HPReal ax = abs(x);
    TermFn term = [=](long n) -> HPReal {
        st->c *= (HPReal(n) + alpha - 1) / n;
        st->ones->advance();
        st->abs_sum += 1 / abs(HPReal(n) + alpha - 1);
        return st->c * st->ones->plain(k) * pow_int(x, static_cast<int>(n));
    };
    // |zeta_m({1}_k; alpha)| <= (sum 1/|i+alpha-1|)^k / k!
    TailBoundFn bound = [=](long n, const HPReal&) -> HPReal {
        if (n % 8 != 0 || !(HPReal(n) + alpha - 1 > 0)) return HPReal(-1);
        HPReal growth = (HPReal(n) + alpha) / (n + 1);
        if (growth < 1) growth = 1;
        const HPReal r = ax * growth;
        if (!(r < 1)) return HPReal(-1);
        const HPReal head = abs(st->c) * pow_int(ax, static_cast<int>(n)) / factorial(k);
        return head * poly_geometric(st->abs_sum, 1 / (HPReal(n) + alpha - 1), k, r);
    };
    return sum_direct(term, bound, tol);
}

}  // namespace

void register_sec3(Registry& r) {
    r.add({"thm-3.1", "sum binom(n+alpha-1,n) zeta_n({1}_k; alpha) x^n = (-1)^k/k! log^k(1-x) (1-x)^{-alpha}", false,
           make_samples({"x", "alpha", "k"}, {{"0.3", "0.4", "2"},
                                              {"-0.5", "1/3", "1"},
                                              {"0.7", "-0.6", "3"},
                                              {"0.5", "2.5", "1"},
                                              {"-0.8", "1/4", "2"},
                                              {"0.9", "0.5", "1"}}),
           [](const Params& p) {
               const HPReal x = real_param(p, "x");
               const HPReal alpha = real_param(p, "alpha");
               const int k = int_param(p, "k");
               require(abs(x) < 1, "x", "must satisfy |x| < 1");
               require(k >= 1, "k", "must be >= 1");
               require(!(is_integer(alpha) && alpha <= 0), "alpha", "must not be 0 or a negative integer");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const HPReal closed = sign(k) / factorial(k) * pow_int(log1p(-x), k) * pow(1 - x, -alpha);
                   return RouteSides{genfun_partial_sum(x, alpha, k, t), rounded(closed), ""};
               })};
           }});

    r.add({"thm-3.2", "int x^{n-1} log^k(1-x) (1-x)^{-alpha} = (-1)^k k! zeta*_n({1}_k; 1-alpha) / (n binom(n-alpha,n))",
           false,
           make_samples({"n", "k", "alpha"}, {{"3", "2", "1/3"},
                                              {"1", "1", "1/4"},
                                              {"5", "3", "-0.5"},
                                              {"2", "0", "0.9"},
                                              {"4", "1", "0.3"},
                                              {"7", "2", "2/5"}}),
           [](const Params& p) {
               const int n = int_param(p, "n");
               const int k = int_param(p, "k");
               const HPReal alpha = real_param(p, "alpha");
               require(n >= 1, "n", "must be >= 1");
               require(k >= 0, "k", "must be >= 0");
               require(alpha < 1, "alpha", "must be < 1");
               auto rhs = [=] {
                   const HPReal v = sign(k) * factorial(k) * mhss(n, Composition::ones(k), 1 - alpha) /
                                    (HPReal(n) * gen_binom(HPReal(n) - alpha, HPReal(n)));
                   return rounded(v);
               };
               return std::vector<Route>{
                   series_route("beta",
                                [=](const HPReal&) {
                                    return RouteSides{rounded(beta_partial(0, k, HPReal(n), 1 - alpha)), rhs(), ""};
                                }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       WeightedIntegrand f;
                       f.core = WeightedIntegrand::Core::monomial;
                       f.monomial_power = n - 1;
                       f.omx_exp = -alpha;
                       f.logomx_pow = k;
                       return RouteSides{de_quad(f, t), rhs(), ""};
                   })};
           }});

    r.add({"thm-3.4", "sum zeta_{n-1}(k_2..k_r) zeta*_n({1}_kk; 1-alpha) / (n^{k_1+1} binom(n-alpha,n)) as binomial sum", false,
           make_samples({"k", "kk", "alpha"}, {{"2", "1", "1/4"},
                                               {"2,1", "1", "1/3"},
                                               {"1,2", "2", "0.3"},
                                               {"3", "0", "-0.5"},
                                               {"2,2", "1", "2/5"},
                                               {"1", "1", "0.9"}}),
           [](const Params& p) {
               const Composition k = index_param(p, "k");
               const int kk = int_param(p, "kk");
               const HPReal alpha = real_param(p, "alpha");
               require(!k.empty(), "k", "must be a nonempty index");
               require(kk >= 0, "kk", "must be >= 0");
               require(alpha < 1, "alpha", "must be < 1");
               const Composition kappa = rev_dual_plus(k);
               auto rhs = [=](const HPReal& t) { return binom_weighted_sum(Family::zeta, kappa, kk, 1 - alpha, t); };
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) { return RouteSides{apery_I(k, kk, alpha, t), rhs(t), ""}; }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       const HPReal c = sign(kk) / factorial(kk);
                       return RouteSides{c * int_mpl_weighted(k, HPReal(1), alpha, 0, kk, t), rhs(t), ""};
                   })};
           }});

    // the four displayed cases, written out explicitly
    struct Ex34 {
        const char* id;
        const char* anchor;
        Composition k;
        std::vector<std::pair<int, Composition>> rhs;
    };
    const std::vector<Ex34> ex34 = {
        {"ex-3.4-a", "sum zeta*_n(1;1-a)/(n^3 binom(n-a,n)) = 2 zeta(3,1;1-a) + zeta(2,2;1-a)", {2}, {{2, {3, 1}}, {1, {2, 2}}}},
        {"ex-3.4-b", "sum zeta_{n-1}(1) zeta*_n(1;1-a)/(n^3 binom(n-a,n)) = 3 zeta(4,1;1-a) + zeta(3,2;1-a)", {2, 1},
         {{3, {4, 1}}, {1, {3, 2}}}},
        {"ex-3.4-c", "sum zeta_{n-1}(2) zeta*_n(1;1-a)/(n^2 binom(n-a,n)) = 2 zeta(3,2;1-a) + 2 zeta(2,3;1-a)", {1, 2},
         {{2, {3, 2}}, {2, {2, 3}}}},
        {"ex-3.4-d",
         "sum zeta_{n-1}(2) zeta*_n(1;1-a)/(n^3 binom(n-a,n)) = 2 zeta(3,2,1;1-a) + 2 zeta(2,3,1;1-a) + zeta(2,2,2;1-a)",
         {2, 2},
         {{2, {3, 2, 1}}, {2, {2, 3, 1}}, {1, {2, 2, 2}}}},
    };
    for (const auto& ex : ex34) {
        r.add({ex.id, ex.anchor, false, make_samples({"alpha"}, {{"0.3"}, {"1/4"}, {"-1/3"}, {"0.9"}}),
               [ex](const Params& p) {
                   const HPReal alpha = real_param(p, "alpha");
                   require(alpha < 1, "alpha", "must be < 1");
                   return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                       Combination c;
                       for (const auto& [coef, idx] : ex.rhs) c.add(HPReal(coef), zeta_at(idx, 1 - alpha, t / 4));
                       return RouteSides{apery_I(ex.k, 1, alpha, t), c.total, ""};
                   })};
               }});
    }

    r.add({"thm-3.5", "delta_{0,kk} zeta(k_1+1,..) plus zeta-weighted apery sums = binomial sum of zeta(kappa+j; 1-alpha)",
           false,
           make_samples({"k", "kk", "alpha"}, {{"2", "0", "1/4"},
                                               {"2", "1", "1/3"},
                                               {"1,2", "1", "0.3"},
                                               {"3", "1", "-0.4"},
                                               {"2,1", "0", "0.6"},
                                               {"1", "2", "1/4"},
                                               {"2,2", "1", "-1/3"}}),
           [](const Params& p) {
               const Composition k = index_param(p, "k");
               const int kk = int_param(p, "kk");
               const HPReal alpha = real_param(p, "alpha");
               require(!k.empty(), "k", "must be a nonempty index");
               require(kk >= 0, "kk", "must be >= 0");
               require(alpha < 1, "alpha", "must be < 1");
               require(!is_integer(alpha), "alpha", "must not be an integer");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const int r_ = k.depth();
                   std::vector<int> ext = k.parts();
                   ext.push_back(2);  // k_{r+1} := 2
                   const HPReal tt = t / 16;
                   Combination lhs;
                   if (kk == 0) {
                       std::vector<int> head = k.parts();
                       head[0] += 1;
                       lhs.add(HPReal(1), htmzv(Composition(head), HPReal(1), tt));
                   }
                   for (int j = 1; j <= k[0] - 1; ++j) {
                       std::vector<int> z = k.parts();
                       z[0] = k[0] + 1 - j;
                       lhs.add(sign(j - 1), htmzv(Composition(z), HPReal(1), tt) * apery_II(kk, Composition(), j, alpha, tt));
                   }
                   int partial = 0;
                   for (int l = 1; l <= r_; ++l) {
                       partial += k[l - 1];
                       for (int j = 1; j <= ext[l] - 1; ++j) {
                           std::vector<int> tail(k.parts().begin() + 1, k.parts().begin() + l);
                           tail.push_back(j);
                           ValueWithBound zf = ValueWithBound::exact(HPReal(1));
                           if (l < r_) {
                               std::vector<int> z(k.parts().begin() + l, k.parts().end());
                               z[0] = ext[l] + 1 - j;
                               zf = htmzv(Composition(z), HPReal(1), tt);
                           }
                           lhs.add(sign(partial - l + j - 1), zf * apery_II(kk, Composition(tail), k[0], alpha, tt));
                       }
                   }
                   return RouteSides{lhs.total,
                                     binom_weighted_sum(Family::zeta, rev_dual_plus(k), kk, 1 - alpha, tt), ""};
               })};
           }});

    r.add({"thm-3.6a", "sum binom(n+alpha-1,n)/n^{m+1} = alpha sum zeta_{n-1}({1}_m)/(n(n-alpha))", false,
           make_samples({"m", "alpha"}, {{"0", "1/4"}, {"1", "1/3"}, {"2", "-0.5"}, {"3", "0.3"}, {"1", "-2/5"}, {"2", "0.9"}}),
           [](const Params& p) {
               const int m = int_param(p, "m");
               const HPReal alpha = real_param(p, "alpha");
               require(m >= 0, "m", "must be >= 0");
               require(alpha < 1 && !is_integer(alpha), "alpha", "must be a non-integer < 1");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   return RouteSides{apery_II(0, Composition(), m + 1, alpha, t),
                                     alpha * param_euler_sum(m, HPReal(0), -alpha, t), ""};
               })};
           }});

    r.add({"thm-3.6b", "sum binom(n+alpha-1,n) zeta_n({1}_k; alpha)/n^{m+1} = sum zeta_{n-1}({1}_m)/(n-alpha)^{k+1}", false,
           make_samples({"k", "m", "alpha"},
                        {{"1", "0", "1/4"}, {"1", "1", "1/3"}, {"2", "1", "-0.5"}, {"2", "2", "0.3"}, {"3", "1", "-2/5"}, {"1", "2", "0.9"}}),
           [](const Params& p) {
               const int k = int_param(p, "k");
               const int m = int_param(p, "m");
               const HPReal alpha = real_param(p, "alpha");
               require(k >= 1, "k", "must be >= 1");
               require(m >= 0, "m", "must be >= 0");
               require(alpha < 1 && !is_integer(alpha), "alpha", "must be a non-integer < 1");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   return RouteSides{apery_II(k, Composition(), m + 1, alpha, t), param_euler_pow(m, k, -alpha, t), ""};
               })};
           }});

    r.add({"eq-harmonic-N", "sum zeta_{n-1}(1)/(n(n+alpha)) = (zeta(2)-zeta(2;1+alpha))/(2alpha) + (psi(1+alpha)+gamma)^2/(2alpha)",
           false, make_samples({"alpha"}, {{"1/4"}, {"1/3"}, {"-0.5"}, {"2.5"}, {"0.9"}, {"-1/3"}}),
           [](const Params& p) {
               const HPReal alpha = real_param(p, "alpha");
               require(alpha != 0, "alpha", "must be nonzero");
               require(!(is_integer(alpha) && alpha < 0), "alpha", "must not be a negative integer");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const HPReal g = digamma(1 + alpha) + euler_gamma();
                   const HPReal closed = (zeta_int(2) - hz2(1 + alpha)) / (2 * alpha) + g * g / (2 * alpha);
                   return RouteSides{param_euler_sum(1, HPReal(0), alpha, t), rounded(closed), ""};
               })};
           }});

    // evaluations following the conjecture
    using Rhs = std::function<ValueWithBound(const HPReal& alpha, const HPReal& t)>;
    struct Ex37 {
        const char* id;
        const char* anchor;
        int k_head;  // -1: taken from the sample
        Composition star;
        int m;
        bool star_from_k;  // star tail {1}_k with k from the sample
        Rhs rhs;
    };
    auto psig = [](const HPReal& a) { return digamma(1 - a) + euler_gamma(); };
    const std::vector<Ex37> ex37 = {
        {"ex-3.7-a", "sum binom(n+a-1,n)/n = -(psi(1-a)+gamma)", 0, {}, 1, false,
         [psig](const HPReal& a, const HPReal&) { return rounded(-psig(a)); }},
        {"ex-3.7-b", "sum binom(n+a-1,n) zeta_n({1}_k;a)/n = zeta(k+1;1-a)", -1, {}, 1, false, nullptr},
        {"ex-3.7-c", "sum binom(n+a-1,n)/n^2 = (zeta(2;1-a)-zeta(2))/2 - (psi(1-a)+gamma)^2/2", 0, {}, 2, false,
         [psig](const HPReal& a, const HPReal&) {
             const HPReal g = psig(a);
             return rounded((hz2(1 - a) - zeta_int(2)) / 2 - g * g / 2);
         }},
        {"ex-3.7-d", "sum binom(n+a-1,n) zeta*_n({1}_k)/n^2 = zeta(k+1,1) - zeta(k+1,1;1-a) - zeta(k+1)(psi(1-a)+gamma)", 0,
         {}, 2, true, nullptr},
        {"ex-3.7-e", "sum binom(n+a-1,n) zeta_n(1;a) zeta*_n(1)/n^2 = zeta(2)zeta(2;1-a) - 2zeta(3,1;1-a) - zeta(2,2;1-a)", 1,
         {1}, 2, false,
         [](const HPReal& a, const HPReal& t) {
             Combination c;
             c.add(zeta_int(2), rounded(hz2(1 - a)));
             c.add(HPReal(-2), zeta_at({3, 1}, 1 - a, t / 4));
             c.add(HPReal(-1), zeta_at({2, 2}, 1 - a, t / 4));
             return c.total;
         }},
        {"ex-3.7-f", "sum binom(n+a-1,n) zeta_n(1;a) zeta*_n(1,1)/n^2 = zeta(3)zeta(2;1-a) - zeta(3,2;1-a) - 3zeta(4,1;1-a)", 1,
         {1, 1}, 2, false,
         [](const HPReal& a, const HPReal& t) {
             Combination c;
             c.add(zeta_int(3), rounded(hz2(1 - a)));
             c.add(HPReal(-1), zeta_at({3, 2}, 1 - a, t / 4));
             c.add(HPReal(-3), zeta_at({4, 1}, 1 - a, t / 4));
             return c.total;
         }},
        {"ex-3.7-g",
         "sum binom(n+a-1,n) zeta_n(1;a) zeta*_n(2,1)/n^2 = 2zeta(3,2,1;1-a) + 2zeta(2,3,1;1-a) + zeta(2,2,2;1-a) + "
         "7/4 zeta(4) zeta(2;1-a) - 2zeta(2)zeta(3,1;1-a) - zeta(2)zeta(2,2;1-a)",
         1, {2, 1}, 2, false,
         [](const HPReal& a, const HPReal& t) {
             Combination c;
             const HPReal tt = t / 8;
             c.add(HPReal(2), zeta_at({3, 2, 1}, 1 - a, tt));
             c.add(HPReal(2), zeta_at({2, 3, 1}, 1 - a, tt));
             c.add(HPReal(1), zeta_at({2, 2, 2}, 1 - a, tt));
             c.add(HPReal(7) / 4 * zeta_int(4), rounded(hz2(1 - a)));
             c.add(-2 * zeta_int(2), zeta_at({3, 1}, 1 - a, tt));
             c.add(-zeta_int(2), zeta_at({2, 2}, 1 - a, tt));
             return c.total;
         }},
    };
    for (const auto& ex : ex37) {
        const bool with_k = ex.k_head < 0 || ex.star_from_k;
        std::vector<Params> samples =
            with_k ? make_samples({"k", "alpha"}, {{"1", "0.3"}, {"2", "1/4"}, {"3", "-1/3"}, {"1", "0.9"}})
                   : make_samples({"alpha"}, {{"0.3"}, {"1/4"}, {"-1/3"}, {"0.9"}});
        r.add({ex.id, ex.anchor, false, samples, [ex, with_k](const Params& p) {
                   const HPReal alpha = real_param(p, "alpha");
                   require(alpha < 1 && !is_integer(alpha), "alpha", "must be a non-integer < 1");
                   int k = 0;
                   if (with_k) {
                       k = int_param(p, "k");
                       require(k >= 1, "k", "must be >= 1");
                   }
                   return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                       const int head = ex.k_head < 0 ? k : ex.k_head;
                       const Composition star = ex.star_from_k ? Composition::ones(k) : ex.star;
                       const ValueWithBound lhs = apery_II(head, star, ex.m, alpha, t);
                       ValueWithBound rhs;
                       if (std::string(ex.id) == "ex-3.7-b") {
                           rhs = rounded(hurwitz_zeta(k + 1, 1 - alpha));
                       } else if (std::string(ex.id) == "ex-3.7-d") {
                           Combination c;
                           c.add(HPReal(1), htmzv({k + 1, 1}, HPReal(1), t / 4));
                           c.add(HPReal(-1), htmzv({k + 1, 1}, 1 - alpha, t / 4));
                           c.add(-zeta_int(k + 1), rounded(digamma(1 - alpha) + euler_gamma()));
                           rhs = c.total;
                       } else {
                           rhs = ex.rhs(alpha, t);
                       }
                       return RouteSides{lhs, rhs, ""};
                   })};
               }});
    }

    r.add({"conj-3.7", "sum zeta_{n-1}({1}_m)/(n(n+alpha)) and sum zeta_{n-1}({1}_m)/(n+alpha)^{k+1}: no closed form claimed",
           true,
           make_samples({"k", "m", "alpha"}, {{"1", "2", "1/4"}, {"2", "2", "1/3"}, {"1", "3", "-0.5"}, {"2", "3", "0.3"}}),
           [](const Params& p) {
               const int k = int_param(p, "k");
               const int m = int_param(p, "m");
               const HPReal alpha = real_param(p, "alpha");
               require(k >= 1, "k", "must be >= 1");
               require(m >= 1, "m", "must be >= 1");
               require(!(is_integer(alpha) && alpha < 0), "alpha", "must not be a negative integer");
               return std::vector<Route>{series_route("evaluate", [=](const HPReal& t) {
                   const ValueWithBound a = param_euler_sum(m, HPReal(0), alpha, t);
                   const ValueWithBound b = param_euler_pow(m, k, alpha, t);
                   return RouteSides{a, b, "lhs = sum/(n(n+alpha)), rhs = sum/(n+alpha)^{k+1}"};
               })};
           }});

    r.add({"rem-3-duality",
           "sum binom(n+alpha-1,n) zeta_n({1}_k;alpha) zeta*_n({1}_r)/n = binom(k+r,k) zeta(k+r+1; 1-alpha)", false,
           make_samples({"k", "r", "alpha"},
                        {{"1", "1", "1/4"}, {"2", "1", "1/3"}, {"1", "2", "-0.5"}, {"2", "2", "0.3"}, {"3", "1", "0.9"}}),
           [](const Params& p) {
               const int k = int_param(p, "k");
               const int rr = int_param(p, "r");
               const HPReal alpha = real_param(p, "alpha");
               require(k >= 1, "k", "must be >= 1");
               require(rr >= 1, "r", "must be >= 1");
               require(alpha < 1 && !is_integer(alpha), "alpha", "must be a non-integer < 1");
               auto rhs = [=] { return rounded(big(binomial(k + rr, k)) * hurwitz_zeta(k + rr + 1, 1 - alpha)); };
               return std::vector<Route>{
                   series_route("apery2",
                                [=](const HPReal& t) {
                                    return RouteSides{apery_II(k, Composition::ones(rr), 1, alpha, t), rhs(), ""};
                                }),
                   series_route("apery1", [=](const HPReal& t) {
                       return RouteSides{apery_I(Composition::ones(rr), k, alpha, t), rhs(), ""};
                   })};
           }});
}

}  // namespace hz::ids
