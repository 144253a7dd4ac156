// symmetric double zeta / T sums, and zeta^(alpha)(k; 1-beta)
#include "identities_common.hpp"

#include <memory>

namespace hz::ids {

namespace {

HPReal C(int n, int k) { return big(binomial(n, k)); }

ValueWithBound double_value(Family f, int a, int b, const HPReal& tol) {
    const Composition k{a, b};
    return f == Family::T ? htmtv(k, HPReal(1), tol) : htmzv(k, HPReal(1), tol);
}

ValueWithBound single_value(Family f, int a, const HPReal& tol) {
    if (f == Family::T) return htmtv(Composition{a}, HPReal(1), tol);
    return rounded(zeta_int(a));
}

// sum_{i+j=m-1} binom(p+i-1,i) binom(q+j-1,j) X(p+i, q+j)
ValueWithBound sym_block(Family f, int p, int q, int m, const HPReal& tol) {
    Combination c;
    for (int i = 0; i <= m - 1; ++i) {
        const int j = m - 1 - i;
        c.add(C(p + i - 1, i) * C(q + j - 1, j), double_value(f, p + i, q + j, tol / m));
    }
    return c.total;
}

// sum_{i+j=q-1} (-1)^j binom(m+i-1,i) binom(p+j-1,j) X(m+i) X(p+j)
ValueWithBound sym_products(Family f, int p, int q, int m, const HPReal& tol) {
    Combination c;
    for (int i = 0; i <= q - 1; ++i) {
        const int j = q - 1 - i;
        c.add(sign(j) * C(m + i - 1, i) * C(p + j - 1, j),
              single_value(f, m + i, tol / (2 * q)) * single_value(f, p + j, tol / (2 * q)));
    }
    return c.total;
}

// the first block through the log-weighted integral of Li or A
ValueWithBound sym_block_quad(Family f, int p, int q, int m, const HPReal& tol) {
    const Composition k = reverse(hoffman_dual(Composition{p - 1, q}));
    const HPReal c = sign(m - 1) / factorial(m - 1);
    if (f == Family::T) return c * int_kta_weighted(k, HPReal(0), m - 1, tol);
    return c * int_mpl_weighted(k, HPReal(1), HPReal(0), 0, m - 1, tol);
}

struct Pqm {
    int p, q, m;
};

Pqm read_pqm(const Params& prm) {
    Pqm s{int_param(prm, "p"), int_param(prm, "q"), int_param(prm, "m")};
    require(s.p >= 2, "p", "must be >= 2");
    require(s.q >= 1, "q", "must be >= 1");
    require(s.m >= 2, "m", "must be >= 2");
    return s;
}

Route sym_series_route(Family f, const Pqm& s) {
    return series_route("series", [f, s](const HPReal& t) {
        Combination lhs;
        lhs.add(HPReal(1), sym_block(f, s.p, s.q, s.m, t / 4));
        lhs.add(-sign(s.q), sym_block(f, s.m, s.q, s.p, t / 4));
        return RouteSides{lhs.total, sym_products(f, s.p, s.q, s.m, t / 2), ""};
    });
}

Route sym_quad_route(Family f, const Pqm& s) {
    return quad_route("quadrature", [f, s](const HPReal& t) {
        Combination lhs;
        lhs.add(HPReal(1), sym_block_quad(f, s.p, s.q, s.m, t / 4));
        lhs.add(-sign(s.q), sym_block(f, s.m, s.q, s.p, t / 4));
        return RouteSides{lhs.total, sym_products(f, s.p, s.q, s.m, t / 2), ""};
    });
}

struct AB {
    HPReal alpha, beta;
};

AB read_ab(const Params& prm) {
    AB s{real_param(prm, "alpha"), real_param(prm, "beta")};
    require(s.alpha < 1, "alpha", "must be < 1");
    require(s.beta < 1, "beta", "must be < 1");
    return s;
}

ValueWithBound pbc(const HPReal& a, const Composition& k, const HPReal& b, const HPReal& tol) {
    return htmzv_pbc(a, k, b, tol);
}

// sum zeta_{n-1}(k_2..k_r)/n^{k_1} B(n+1-alpha, 1-beta)
ValueWithBound li_beta_series(const Composition& k, const HPReal& alpha, const HPReal& beta, const HPReal& tol) {
    const Composition tail = k.tail(1);
    auto ns = std::make_shared<NestedSum>(NestedSum::powers(tail, ShiftVector::constant(HPReal(1), tail.depth()), false));
    auto b = std::make_shared<HPReal>(hz::beta(1 - alpha, 1 - beta));
    const int k1 = k[0];
    TermFn term = [=](long n) -> HPReal {
        const HPReal lower = ns->value();
        ns->advance();
        *b *= (HPReal(n) - alpha) / (HPReal(n) + 1 - alpha - beta);
        if (lower == 0) return HPReal(0);
        return lower * pow_int(HPReal(n), -k1) * *b;
    };
    return sum_extrapolated(term, SeriesShape{{beta - k1}, tail.depth()}, tol);
}

HPReal beta_closed(const AB& s) { return beta(1 - s.alpha, 1 - s.beta); }

}  // namespace

void register_sec6_7(Registry& r) {
    const auto pqm_samples = make_samples({"p", "q", "m"}, {{"2", "1", "2"},
                                                             {"3", "2", "3"},
                                                             {"2", "2", "2"},
                                                             {"3", "1", "2"},
                                                             {"2", "3", "3"},
                                                             {"4", "1", "2"}});
    r.add({"thm-6.1-zeta",
           "sum binom binom zeta(p+i,q+j) [i+j=m-1] - (-1)^q (p<->m) = sum (-1)^j binom binom zeta(m+i) zeta(p+j) [i+j=q-1]",
           false, pqm_samples, [](const Params& prm) {
               const Pqm s = read_pqm(prm);
               return std::vector<Route>{sym_series_route(Family::zeta, s), sym_quad_route(Family::zeta, s)};
           }});
    r.add({"thm-6.1-T",
           "sum binom binom T(p+i,q+j) [i+j=m-1] - (-1)^q (p<->m) = sum (-1)^j binom binom T(m+i) T(p+j) [i+j=q-1]", false,
           pqm_samples, [](const Params& prm) {
               const Pqm s = read_pqm(prm);
               return std::vector<Route>{sym_series_route(Family::T, s), sym_quad_route(Family::T, s)};
           }});

    r.add({"cor-6.2",
           "(1-(-1)^q) sum binom binom X(p+i,q+j) [i+j=p-1] = sum (-1)^j binom binom X(p+i) X(p+j) [i+j=q-1], X = zeta, T",
           false, make_samples({"p", "q"}, {{"2", "1"}, {"3", "1"}, {"2", "3"}, {"3", "2"}, {"4", "1"}, {"2", "2"}}),
           [](const Params& prm) {
               const int p = int_param(prm, "p");
               const int q = int_param(prm, "q");
               require(p >= 2, "p", "must be >= 2");
               require(q >= 1, "q", "must be >= 1");
               auto route = [p, q](Family f, const char* name) {
                   return series_route(name, [f, p, q](const HPReal& t) {
                       ValueWithBound lhs = ValueWithBound::exact(HPReal(0));
                       std::string note;
                       if (q % 2 == 1) lhs = HPReal(2) * sym_block(f, p, q, p, t / 2);
                       else note = "even q: left side has the factor 1-(-1)^q = 0";
                       return RouteSides{lhs, sym_products(f, p, q, p, t / 2), note};
                   });
               };
               return std::vector<Route>{route(Family::zeta, "zeta"), route(Family::T, "T")};
           }});

    r.add({"eq-7-ideas-4", "int Li_k(x) x^{-alpha} (1-x)^{-beta} dx = zeta^(alpha)(kappa; 1-beta)", false,
           make_samples({"k", "alpha", "beta"}, {{"3", "1/4", "1/4"},
                                                 {"2", "1/3", "1/4"},
                                                 {"1", "0.3", "-0.5"},
                                                 {"2,1", "1/2", "0.2"},
                                                 {"1,2", "-0.4", "0.6"},
                                                 {"2", "0.9", "0.1"}}),
           [](const Params& prm) {
               const Composition k = index_param(prm, "k");
               require(!k.empty(), "k", "must be a nonempty index");
               const AB s = read_ab(prm);
               const Composition kappa = rev_dual_plus(k);
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    return RouteSides{li_beta_series(k, s.alpha, s.beta, t),
                                                      pbc(s.alpha, kappa, 1 - s.beta, t), ""};
                                }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       return RouteSides{int_mpl_weighted(k, s.alpha, s.beta, 0, 0, t), pbc(s.alpha, kappa, 1 - s.beta, t),
                                         ""};
                   })};
           }});

    r.add({"eq-7-ideas-5", "zeta^(alpha)(1; 1-beta) = zeta^(beta)(1; 1-alpha) = B(1-alpha, 1-beta)", false,
           make_samples({"alpha", "beta"}, {{"1/3", "1/4"}, {"0.5", "0.5"}, {"-0.5", "0.3"}, {"0.9", "-1/3"}, {"0.2", "0.7"}}),
           [](const Params& prm) {
               const AB s = read_ab(prm);
               const Composition one{1};
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    return RouteSides{pbc(s.alpha, one, 1 - s.beta, t), rounded(beta_closed(s)), ""};
                                }),
                   series_route("swapped",
                                [=](const HPReal& t) {
                                    return RouteSides{pbc(s.beta, one, 1 - s.alpha, t), rounded(beta_closed(s)), ""};
                                }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       WeightedIntegrand f;
                       f.core = WeightedIntegrand::Core::constant;
                       f.x_exp = -s.alpha;
                       f.omx_exp = -s.beta;
                       return RouteSides{de_quad(f, t), rounded(beta_closed(s)), ""};
                   })};
           }});

    r.add({"eq-7-ideas-6",
           "sum binom(n+alpha-2,n-1) zeta_{n-1}({1}_k;alpha)/(n-beta)^{m+1} = (alpha<->beta, k<->m) = "
           "d^{k+m} B(1-alpha,1-beta)/(dalpha^k dbeta^m k! m!)",
           false,
           make_samples({"k", "m", "alpha", "beta"}, {{"1", "1", "1/3", "1/4"},
                                                      {"2", "0", "0.3", "-0.5"},
                                                      {"0", "2", "1/2", "0.2"},
                                                      {"1", "2", "-0.4", "0.6"},
                                                      {"2", "1", "0.9", "0.1"}}),
           [](const Params& prm) {
               const int k = int_param(prm, "k");
               const int m = int_param(prm, "m");
               require(k >= 0, "k", "must be >= 0");
               require(m >= 0, "m", "must be >= 0");
               const AB s = read_ab(prm);
               auto rhs = [=] {
                   return rounded(sign(k + m) / (factorial(k) * factorial(m)) *
                                  beta_partial(k, m, 1 - s.alpha, 1 - s.beta));
               };
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    return RouteSides{htmzv_pbc_dalpha(s.alpha, k, Composition{m + 1}, 1 - s.beta, t), rhs(),
                                                      ""};
                                }),
                   series_route("swapped",
                                [=](const HPReal& t) {
                                    return RouteSides{htmzv_pbc_dalpha(s.beta, m, Composition{k + 1}, 1 - s.alpha, t), rhs(),
                                                      ""};
                                }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       WeightedIntegrand f;
                       f.core = WeightedIntegrand::Core::constant;
                       f.x_exp = -s.alpha;
                       f.omx_exp = -s.beta;
                       f.logx_pow = k;
                       f.logomx_pow = m;
                       const HPReal c = sign(k + m) / (factorial(k) * factorial(m));
                       return RouteSides{c * de_quad(f, t), rhs(), ""};
                   })};
           }});

    r.add({"eq-7-depth1", "zeta^(alpha)(m+1; 1-beta) = int Li_{{1}_m}(x) x^{-alpha}(1-x)^{-beta} = (1/m!) d^m/dbeta^m B(1-alpha,1-beta)",
           false,
           make_samples({"m", "alpha", "beta"}, {{"1", "1/3", "1/4"},
                                                 {"2", "0.3", "-0.5"},
                                                 {"3", "1/2", "0.2"},
                                                 {"1", "-0.4", "0.6"},
                                                 {"2", "0.9", "0.1"}}),
           [](const Params& prm) {
               const int m = int_param(prm, "m");
               require(m >= 1, "m", "must be >= 1");
               const AB s = read_ab(prm);
               const Composition idx{m + 1};
               auto rhs = [=] { return rounded(sign(m) / factorial(m) * beta_partial(0, m, 1 - s.alpha, 1 - s.beta)); };
               std::vector<Route> routes{
                   series_route("series",
                                [=](const HPReal& t) {
                                    return RouteSides{pbc(s.alpha, idx, 1 - s.beta, t), rhs(), ""};
                                }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       return RouteSides{int_mpl_weighted(Composition::ones(m), s.alpha, s.beta, 0, 0, t), rhs(), ""};
                   })};
               if (m <= 2) {
                   routes.push_back(series_route("digamma", [=](const HPReal& t) {
                       const HPReal B = beta_closed(s);
                       const HPReal d = digamma(1 - s.beta) - digamma(2 - s.alpha - s.beta);
                       const HPReal closed =
                           m == 1 ? HPReal(-B * d)
                                  : HPReal(B / 2 * (d * d + polygamma(1, 1 - s.beta) - polygamma(1, 2 - s.alpha - s.beta)));
                       return RouteSides{pbc(s.alpha, idx, 1 - s.beta, t), rounded(closed), ""};
                   }));
               }
               return routes;
           }});

    r.add({"thm-7.2",
           "int Li_{k,{1}_{r-1}}(x) x^{-alpha}(1-x)^{-beta} = sum_j (-1)^j zeta(k-j,{1}_{r-1}) zeta^(beta)(j+1;1-alpha) - "
           "(-1)^k sum (1/l!) d^l/dbeta^l int Li_i(x) x^{-beta}(1-x)^{-alpha}",
           false,
           make_samples({"k", "r", "alpha", "beta"}, {{"2", "1", "1/3", "1/4"},
                                                      {"2", "2", "0.3", "-0.5"},
                                                      {"3", "1", "1/2", "0.2"},
                                                      {"1", "2", "-0.4", "0.6"},
                                                      {"3", "2", "1/4", "1/4"},
                                                      {"1", "1", "0.9", "0.1"}}),
           [](const Params& prm) {
               const int k = int_param(prm, "k");
               const int rr = int_param(prm, "r");
               require(k >= 1, "k", "must be >= 1");
               require(rr >= 1, "r", "must be >= 1");
               const AB s = read_ab(prm);
               const Composition li = Composition{k}.concat(Composition::ones(rr - 1));
               auto rhs = [=](const HPReal& t) {
                   Combination c;
                   const HPReal tt = t / (4 * (k + rr) * (k + rr));
                   for (int j = 0; j <= k - 2; ++j)
                       c.add(sign(j), htmzv(Composition{k - j}.concat(Composition::ones(rr - 1)), HPReal(1), tt) *
                                          pbc(s.beta, Composition{j + 1}, 1 - s.alpha, tt));
                   // i_1 + ... + i_{k-1} + l = r + k - 1 with i_j >= 1, l >= 0
                   for (int l = 0; l <= rr + k - 1; ++l) {
                       const int w = rr + k - 1 - l;
                       if (k == 1) {
                           if (w != 0) continue;
                           c.add(-sign(k), htmzv_pbc_dalpha(s.beta, l, Composition{1}, 1 - s.alpha, tt));
                           continue;
                       }
                       if (w < k - 1) continue;
                       for (const auto& i : compositions_of(w)) {
                           if (i.depth() != k - 1) continue;
                           c.add(-sign(k), htmzv_pbc_dalpha(s.beta, l, rev_dual_plus(i), 1 - s.alpha, tt));
                       }
                   }
                   return c.total;
               };
               const Composition kappa = rev_dual_plus(li);
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    return RouteSides{pbc(s.alpha, kappa, 1 - s.beta, t / 2), rhs(t / 2), ""};
                                }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       return RouteSides{int_mpl_weighted(li, s.alpha, s.beta, 0, 0, t / 2), rhs(t / 2), ""};
                   })};
           }});

    r.add({"cor-7.3",
           "zeta^(alpha)(2,1;1-beta) + zeta^(beta)(2,1;1-alpha) = B(1-alpha,1-beta) {zeta(2) + psi'(2-alpha-beta) - "
           "(psi(1-alpha)-psi(2-alpha-beta))(psi(1-beta)-psi(2-alpha-beta))}",
           false,
           make_samples({"alpha", "beta"}, {{"1/3", "1/4"}, {"0.3", "-0.5"}, {"1/2", "1/2"}, {"-0.4", "0.6"}, {"0.9", "0.1"}}),
           [](const Params& prm) {
               const AB s = read_ab(prm);
               auto rhs = [=] {
                   const HPReal g = digamma(2 - s.alpha - s.beta);
                   const HPReal v = beta_closed(s) * (zeta_int(2) + polygamma(1, 2 - s.alpha - s.beta) -
                                                      (digamma(1 - s.alpha) - g) * (digamma(1 - s.beta) - g));
                   return rounded(v);
               };
               const Composition k21{2, 1};
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    return RouteSides{pbc(s.alpha, k21, 1 - s.beta, t / 2) + pbc(s.beta, k21, 1 - s.alpha, t / 2),
                                                      rhs(), ""};
                                }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       const Composition two{2};
                       return RouteSides{int_mpl_weighted(two, s.alpha, s.beta, 0, 0, t / 2) +
                                             int_mpl_weighted(two, s.beta, s.alpha, 0, 0, t / 2),
                                         rhs(), ""};
                   })};
           }});

    r.add({"cor-7.4",
           "zeta^(alpha)(3,1;1-beta) + zeta^(beta)(2,1,1;1-alpha) = zeta(2,1) zeta^(beta)(1;1-alpha) - (1/2) d^2/dbeta^2 "
           "zeta^(beta)(2;1-alpha) - d/dbeta zeta^(beta)(2,1;1-alpha)",
           false,
           make_samples({"alpha", "beta"}, {{"1/3", "1/4"}, {"0.3", "-0.5"}, {"1/2", "1/2"}, {"-0.4", "0.6"}, {"0.9", "0.1"}}),
           [](const Params& prm) {
               const AB s = read_ab(prm);
               auto rhs = [=](const HPReal& t) {
                   const HPReal tt = t / 4;
                   Combination c;
                   c.add(HPReal(1), htmzv(Composition{2, 1}, HPReal(1), tt) * pbc(s.beta, Composition{1}, 1 - s.alpha, tt));
                   c.add(HPReal(-1), htmzv_pbc_dalpha(s.beta, 2, Composition{2}, 1 - s.alpha, tt));
                   c.add(HPReal(-1), htmzv_pbc_dalpha(s.beta, 1, Composition{2, 1}, 1 - s.alpha, tt));
                   return c.total;
               };
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    return RouteSides{pbc(s.alpha, Composition{3, 1}, 1 - s.beta, t / 4) +
                                                          pbc(s.beta, Composition{2, 1, 1}, 1 - s.alpha, t / 4),
                                                      rhs(t / 2), ""};
                                }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       return RouteSides{int_mpl_weighted(Composition{2, 1}, s.alpha, s.beta, 0, 0, t / 4) +
                                             int_mpl_weighted(Composition{3}, s.beta, s.alpha, 0, 0, t / 4),
                                         rhs(t / 2), ""};
                   })};
           }});

    r.add({"thm-7.5",
           "zeta^(alpha)(kappa(k);1-beta) = -(1-alpha) zeta^(alpha)(kappa(k+);1-beta) - beta zeta^(alpha-1)(kappa(k+);-beta)",
           false,
           make_samples({"k", "alpha", "beta"}, {{"2", "0.3", "-0.4"},
                                                 {"1", "1/4", "-1/3"},
                                                 {"2,1", "1/2", "-0.2"},
                                                 {"1,2", "-0.3", "-0.5"},
                                                 {"3", "1/3", "-0.7"}}),
           [](const Params& prm) {
               const Composition k = index_param(prm, "k");
               require(!k.empty(), "k", "must be a nonempty index");
               const AB s = read_ab(prm);
               require(s.beta < 0, "beta", "must be < 0");
               const Composition kp = plus_first(k);
               const Composition kappa = rev_dual_plus(k), kappa_p = rev_dual_plus(kp);
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    const HPReal tt = t / 4;
                                    Combination rhs;
                                    rhs.add(-(1 - s.alpha), pbc(s.alpha, kappa_p, 1 - s.beta, tt));
                                    rhs.add(-s.beta, pbc(s.alpha - 1, kappa_p, -s.beta, tt));
                                    return RouteSides{pbc(s.alpha, kappa, 1 - s.beta, t / 2), rhs.total, ""};
                                }),
                   quad_route("quadrature", [=](const HPReal& t) {
                       const HPReal tt = t / 4;
                       Combination rhs;
                       rhs.add(-(1 - s.alpha), int_mpl_weighted(kp, s.alpha, s.beta, 0, 0, tt));
                       rhs.add(-s.beta, int_mpl_weighted(kp, s.alpha - 1, s.beta + 1, 0, 0, tt));
                       return RouteSides{int_mpl_weighted(k, s.alpha, s.beta, 0, 0, t / 2), rhs.total, ""};
                   })};
           }});
}

}  // namespace hz::ids
