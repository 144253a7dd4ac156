// integrals of Li_k and A(k;x) against log powers and (1-x)^{-alpha}
#include "identities_common.hpp"

namespace hz::ids {

namespace {

struct Sample21 {
    Composition k;
    int kk;
    HPReal alpha;
    Composition kappa;
};

Sample21 read21(const Params& p) {
    Sample21 s{index_param(p, "k"), int_param(p, "kk"), real_param(p, "alpha"), {}};
    require(!s.k.empty(), "k", "must be a nonempty index");
    require(s.kk >= 0, "kk", "must be >= 0");
    require(s.alpha < 1, "alpha", "must be < 1");
    s.kappa = rev_dual_plus(s.k);
    return s;
}

HPReal kk_factor(int kk) { return sign(kk) * factorial(kk); }

std::vector<Params> samples_k_kk_alpha(std::initializer_list<std::tuple<const char*, int, const char*>> list) {
    std::vector<Params> out;
    for (const auto& [k, kk, a] : list) out.push_back({{"k", k}, {"kk", std::to_string(kk)}, {"alpha", a}});
    return out;
}

std::vector<Params> samples_k_kk(std::initializer_list<std::pair<const char*, int>> list) {
    std::vector<Params> out;
    for (const auto& [k, kk] : list) out.push_back({{"k", k}, {"kk", std::to_string(kk)}});
    return out;
}

}  // namespace

void register_sec2(Registry& r) {
    r.add({"thm-2.1a", "int Li_k(x) log^kk(1-x) / (x (1-x)^alpha) as binomial sum of zeta(kappa+j; 1-alpha)", false,
           samples_k_kk_alpha({{"2", 1, "1/4"},
                               {"2,2", 1, "1/4"},
                               {"1", 2, "1/3"},
                               {"2,1", 0, "0.5"},
                               {"3", 1, "0.4"},
                               {"1,2", 1, "0.3"},
                               {"2", 2, "0.9"}}),
           [](const Params& p) {
               const Sample21 s = read21(p);
               auto rhs = [s](const HPReal& t) {
                   return kk_factor(s.kk) * binom_weighted_sum(Family::zeta, s.kappa, s.kk, 1 - s.alpha, t);
               };
               return std::vector<Route>{
                   series_route("series",
                                [s, rhs](const HPReal& t) {
                                    return RouteSides{kk_factor(s.kk) * apery_I(s.k, s.kk, s.alpha, t), rhs(t), ""};
                                }),
                   quad_route("quadrature", [s, rhs](const HPReal& t) {
                       return RouteSides{int_mpl_weighted(s.k, HPReal(1), s.alpha, 0, s.kk, t), rhs(t), ""};
                   })};
           }});

    r.add({"thm-2.1b", "int A(k;x) log^kk(u) u^{-alpha} dx/x, u=(1-x)/(1+x), as binomial sum of T(kappa+j; 1-alpha)",
           false,
           samples_k_kk_alpha({{"2", 1, "1/4"}, {"1", 1, "1/3"}, {"2", 0, "0.5"}, {"1,2", 1, "0.3"}, {"3", 0, "0.4"},
                               {"1", 2, "0.9"}}),
           [](const Params& p) {
               const Sample21 s = read21(p);
               return std::vector<Route>{quad_route("quadrature", [s](const HPReal& t) {
                   return RouteSides{int_kta_weighted(s.k, s.alpha, s.kk, t),
                                     kk_factor(s.kk) * binom_weighted_sum(Family::T, s.kappa, s.kk, 1 - s.alpha, t),
                                     ""};
               })};
           }});

    r.add({"thm-2.2", "int Li_k(x/(x-1)) / (x (1-x)^alpha) = (-1)^r zeta*(kappa; 1-alpha)", false,
           [] {
               std::vector<Params> out;
               for (auto [k, a] : std::initializer_list<std::pair<const char*, const char*>>{
                        {"2", "1/4"}, {"1", "1/3"}, {"2,1", "0.5"}, {"1,2", "0.3"}, {"3", "0.4"}, {"1,1", "0.9"}})
                   out.push_back({{"k", k}, {"alpha", a}});
               return out;
           }(),
           [](const Params& p) {
               const Composition k = index_param(p, "k");
               const HPReal alpha = real_param(p, "alpha");
               require(!k.empty(), "k", "must be a nonempty index");
               require(alpha < 1, "alpha", "must be < 1");
               return std::vector<Route>{quad_route("quadrature", [k, alpha](const HPReal& t) {
                   WeightedIntegrand f;
                   f.core = WeightedIntegrand::Core::mpl_landen;
                   f.index = k;
                   f.x_exp = -1;
                   f.omx_exp = -alpha;
                   return RouteSides{de_quad(f, t), sign(k.depth()) * htmzsv(rev_dual_plus(k), 1 - alpha, t), ""};
               })};
           }});

    r.add({"cor-2.3-xi", "xi(kk+1; k) as binomial sum of zeta(kappa+j)", false,
           samples_k_kk({{"2", 1}, {"1", 2}, {"2,1", 1}, {"1,2", 0}, {"3", 1}, {"1,1", 2}}),
           [](const Params& p) {
               Params q = p;
               q["alpha"] = "0";
               const Sample21 s = read21(q);
               auto ak = [s](const HPReal& t) { return arakawa_kaneko(AKKind::xi, s.kk + 1, s.k, t); };
               return std::vector<Route>{
                   series_route("series",
                                [s, ak](const HPReal& t) {
                                    return RouteSides{apery_I(s.k, s.kk, HPReal(0), t), ak(t), ""};
                                }),
                   quad_route("quadrature", [s, ak](const HPReal& t) {
                       const HPReal c = sign(s.kk) / factorial(s.kk);
                       return RouteSides{c * int_mpl_weighted(s.k, HPReal(1), HPReal(0), 0, s.kk, t), ak(t), ""};
                   })};
           }});

    r.add({"cor-2.3-psi", "psi(kk+1; k) as binomial sum of T(kappa+j)", false,
           samples_k_kk({{"2", 1}, {"1", 2}, {"2,1", 1}, {"1,2", 0}, {"3", 1}, {"1,1", 1}}),
           [](const Params& p) {
               Params q = p;
               q["alpha"] = "0";
               const Sample21 s = read21(q);
               return std::vector<Route>{quad_route("quadrature", [s](const HPReal& t) {
                   const HPReal c = sign(s.kk) / factorial(s.kk);
                   return RouteSides{c * int_kta_weighted(s.k, HPReal(0), s.kk, t),
                                     arakawa_kaneko(AKKind::psi, s.kk + 1, s.k, t), ""};
               })};
           }});

    r.add({"eq-eta", "eta(kk+1; k) = (-1)^{r-1} binomial sum of zeta*(kappa+j)", false,
           samples_k_kk({{"2", 1}, {"1", 2}, {"2,1", 1}, {"1,2", 0}, {"3", 1}, {"1,1", 1}}),
           [](const Params& p) {
               Params q = p;
               q["alpha"] = "0";
               const Sample21 s = read21(q);
               return std::vector<Route>{
                   quad_route("quadrature", [s](const HPReal& t) {
                       WeightedIntegrand f;
                       f.core = WeightedIntegrand::Core::mpl_landen;
                       f.index = s.k;
                       f.x_exp = -1;
                       f.logomx_pow = s.kk;
                       const HPReal c = sign(s.kk + 1) / factorial(s.kk);
                       return RouteSides{c * de_quad(f, t), arakawa_kaneko(AKKind::eta, s.kk + 1, s.k, t), ""};
                   })};
           }});
}

}  // namespace hz::ids
