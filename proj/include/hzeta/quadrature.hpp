#pragma once

#include "hzeta/compositions.hpp"
#include "hzeta/hpreal.hpp"
#include "hzeta/value.hpp"

#include <vector>

namespace hz {

// core(x) * x^a * (1-x)^b * log^p(x) * log^q(1-x) on (0,1).
// With kta_frame the (1-x) factors are replaced by u = (1-x)/(1+x): core(x) x^a u^b log^p(x) log^q(u).
struct WeightedIntegrand {
    enum class Core { mpl, mpl_landen, kta, monomial, constant };
    Core core = Core::constant;
    Composition index;  // mpl / mpl_landen / kta
    int monomial_power = 0;  // core x^n
    HPReal x_exp = 0;
    HPReal omx_exp = 0;
    int logx_pow = 0;
    int logomx_pow = 0;
    bool kta_frame = false;
};

struct QuadOptions {
    int max_levels = 12;
    int min_levels = 3;
    std::vector<HPReal>* level_estimates = nullptr;  // filled with h * sum per level when set
};

// tanh-sinh on (0,1); heuristic level-doubling error plus the endpoint envelope (rigorous = false)
ValueWithBound de_quad(const WeightedIntegrand& f, const HPReal& tol, const QuadOptions& opt = {});

// int_0^1 Li_k(x) x^{-alpha} (1-x)^{-beta} log^p(x) log^q(1-x) dx
ValueWithBound int_mpl_weighted(const Composition& k, const HPReal& alpha, const HPReal& beta, int p, int q,
                                const HPReal& tol);

// int_0^1 A(k;x) log^q((1-x)/(1+x)) ((1-x)/(1+x))^{-alpha} dx / x
ValueWithBound int_kta_weighted(const Composition& k, const HPReal& alpha, int q, const HPReal& tol);

}  // namespace hz
