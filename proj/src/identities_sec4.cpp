// general results: multiple harmonic star sums against Hurwitz zeta values
#include "identities_common.hpp"

namespace hz::ids {

namespace {

Composition repeat(const Composition& block, int times) {
    Composition out;
    for (int i = 0; i < times; ++i) out = out.concat(block);
    return out;
}

// ({1}_{m-1}, {2, {1}_{m-2}}_{p-1})
Composition ones_twos_index(int m, int p) {
    return Composition::ones(m - 1).concat(repeat(Composition{2}.concat(Composition::ones(m - 2)), p - 1));
}

// ({{1}_{m-2}, 2}_{l-1}, {1}_{m-1})
Composition star_block(int m, int l) {
    return repeat(Composition::ones(m - 2).concat(Composition{2}), l - 1).concat(Composition::ones(m - 1));
}

// (m_p, ..., m_{j+1}), empty when j = p
Composition reversed_head(const Composition& m, int j) {
    std::vector<int> v;
    for (int i = m.depth(); i > j; --i) v.push_back(m[i - 1]);
    return Composition(std::move(v));
}

// (m_1 - 1, m_2, ..., m_j)^vee
Composition lowered_dual(const Composition& m, int j) {
    std::vector<int> v(m.parts().begin(), m.parts().begin() + j);
    --v[0];
    return hoffman_dual(Composition(std::move(v)));
}

ValueWithBound mzv_or_one(const Composition& k, const HPReal& tol) {
    if (k.empty()) return ValueWithBound::exact(HPReal(1));
    return htmzv(k, HPReal(1), tol);
}

struct Sample44 {
    Composition m;
    int k;
};

Sample44 read44(const Params& p) {
    Sample44 s{index_param(p, "m"), int_param(p, "k")};
    require(!s.m.empty(), "m", "must be a nonempty index");
    require(s.m[0] >= 2 && s.m[s.m.depth() - 1] >= 2, "m", "needs m_1, m_p >= 2");
    require(s.k >= 0, "k", "must be >= 0");
    return s;
}

// left side of the m-index relation at a given alpha
ValueWithBound thm44_lhs(const Sample44& s, const HPReal& alpha, const HPReal& tol) {
    const int p = s.m.depth();
    const HPReal t = tol / (2 * p);
    Combination c;
    for (int j = 1; j <= p; ++j)
        c.add(sign(j - 1), mzv_or_one(reversed_head(s.m, j), t) * apery_II(s.k, lowered_dual(s.m, j), 1, alpha, t));
    return c.total;
}

}  // namespace

void register_sec4(Registry& r) {
    r.add({"thm-4.2", "sum zeta_{n-1}({1}_{m-2},{2,{1}_{m-2}}_{p-1}) zeta*_n({1}_k;1-alpha)/(n^2 binom(n-alpha,n)) = cycle sum",
           false,
           make_samples({"m", "p", "k", "alpha"}, {{"2", "1", "1", "1/4"},
                                                   {"2", "2", "1", "1/3"},
                                                   {"3", "2", "0", "0.3"},
                                                   {"3", "1", "2", "-0.5"},
                                                   {"2", "3", "1", "2/5"},
                                                   {"4", "2", "1", "0.9"}}),
           [](const Params& prm) {
               const int m = int_param(prm, "m");
               const int p = int_param(prm, "p");
               const int k = int_param(prm, "k");
               const HPReal alpha = real_param(prm, "alpha");
               require(m >= 2, "m", "must be >= 2");
               require(p >= 1, "p", "must be >= 1");
               require(k >= 0, "k", "must be >= 0");
               require(alpha < 1, "alpha", "must be < 1");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   return RouteSides{apery_I(ones_twos_index(m, p), k, alpha, t), cycle_sum(m, p, k, alpha), ""};
               })};
           }});

    r.add({"thm-4.3",
           "delta_{0,k} zeta({m}_p) + sum_l (-1)^{l-1} zeta({m}_{p-l}) apery sum with star index ({{1}_{m-2},2}_{l-1},{1}_{m-1}) "
           "= cycle sum",
           false,
           make_samples({"m", "p", "k", "alpha"}, {{"2", "1", "1", "1/4"},
                                                   {"2", "2", "0", "1/3"},
                                                   {"3", "2", "1", "0.3"},
                                                   {"2", "2", "2", "-0.5"},
                                                   {"3", "1", "0", "-1/3"},
                                                   {"2", "3", "1", "2/5"}}),
           [](const Params& prm) {
               const int m = int_param(prm, "m");
               const int p = int_param(prm, "p");
               const int k = int_param(prm, "k");
               const HPReal alpha = real_param(prm, "alpha");
               require(m >= 2, "m", "must be >= 2");
               require(p >= 1, "p", "must be >= 1");
               require(k >= 0, "k", "must be >= 0");
               require(alpha < 1 && !is_integer(alpha), "alpha", "must be a non-integer < 1");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const HPReal tt = t / (2 * p + 2);
                   const Composition mm = repeat(Composition{m}, 1);
                   Combination c;
                   if (k == 0) c.add(HPReal(1), mzv_or_one(repeat(mm, p), tt));
                   for (int l = 1; l <= p; ++l)
                       c.add(sign(l - 1), mzv_or_one(repeat(mm, p - l), tt) * apery_II(k, star_block(m, l), 1, alpha, tt));
                   return RouteSides{c.total, cycle_sum(m, p, k, alpha), ""};
               })};
           }});

    r.add({"thm-4.4",
           "sum_j (-1)^{j-1} zeta(m_p..m_{j+1}) sum binom(n+alpha-1,n) zeta_n({1}_k;alpha) zeta*_n((m_1-1,..,m_j)^vee)/n "
           "= binomial sum of zeta(m_p+i_p..m_1+i_1; 1-alpha) - delta_{0,k} zeta(m_p..m_1)",
           false,
           make_samples({"m", "k", "alpha"}, {{"2", "1", "1/4"},
                                              {"2,2", "0", "1/3"},
                                              {"3,1,2", "1", "0.3"},
                                              {"2,3", "1", "-0.5"},
                                              {"3,2", "2", "2/5"},
                                              {"2,1,2", "0", "-1/3"}}),
           [](const Params& prm) {
               const Sample44 s = read44(prm);
               const HPReal alpha = real_param(prm, "alpha");
               require(alpha < 1 && !is_integer(alpha), "alpha", "must be a non-integer < 1");
               return std::vector<Route>{series_route("series", [=](const HPReal& t) {
                   const Composition rev = reverse(s.m);
                   ValueWithBound rhs = binom_weighted_sum(Family::zeta, rev, s.k, 1 - alpha, t / 4);
                   if (s.k == 0) rhs = rhs - htmzv(rev, HPReal(1), t / 4);
                   return RouteSides{thm44_lhs(s, alpha, t / 2), rhs, ""};
               })};
           }});

    r.add({"eq-4.4-limit",
           "sum_j (-1)^{j-1} zeta(m_p..m_{j+1}) sum zeta_{n-1}({1}_{k-1}) zeta*_n((m_1-1,..,m_j)^vee)/n^2 "
           "= binomial sum of zeta(m_p+i_p..m_1+i_1)",
           false,
           make_samples({"m", "k"}, {{"2", "1"}, {"2,2", "1"}, {"3,2", "2"}, {"2,1,2", "1"}, {"3", "2"}, {"2,3", "1"}}),
           [](const Params& prm) {
               const Sample44 s = read44(prm);
               require(s.k >= 1, "k", "must be >= 1");
               auto rhs = [s](const HPReal& t) {
                   return binom_weighted_sum(Family::zeta, reverse(s.m), s.k, HPReal(1), t);
               };
               return std::vector<Route>{
                   series_route("series",
                                [=](const HPReal& t) {
                                    const int p = s.m.depth();
                                    const HPReal tt = t / (2 * p);
                                    Combination c;
                                    for (int j = 1; j <= p; ++j)
                                        c.add(sign(j - 1), mzv_or_one(reversed_head(s.m, j), tt) *
                                                               ky_sum(Composition::ones(s.k - 1), lowered_dual(s.m, j), 2, tt));
                                    return RouteSides{c.total, rhs(t / 2), ""};
                                }),
                   quad_route("limit", [=](const HPReal& t) {
                       std::string note;
                       const ValueWithBound lim =
                           limit_at_zero([&](const HPReal& eps) { return thm44_lhs(s, eps, t / 10); }, note);
                       return RouteSides{lim, rhs(t / 2), note};
                   })};
           }});
}

}  // namespace hz::ids
