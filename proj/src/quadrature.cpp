#include "hzeta/quadrature.hpp"

#include "hzeta/errors.hpp"
#include "hzeta/series_engine.hpp"
#include "hzeta/specfun.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace hz {

namespace {

struct Node {
    HPReal near;  // distance to the nearer endpoint, 1/(1+e^{pi sinh t})
    HPReal far;   // 1 - near
    HPReal weight;
};

using Level = std::vector<Node>;  // nodes with t > 0 (t = 0 on level 0 is stored first)

double t_max(int bits) { return std::asinh(8.0 * bits * std::log(2.0) / M_PI) + 0.5; }

std::shared_ptr<const Level> level_nodes(int level) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Level>> cache;
    const int bits = current_bits();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({level, bits});
        if (it != cache.end()) return it->second;
    }
    auto nodes = std::make_shared<Level>();
    const HPReal h = ldexp(HPReal(1), -level);
    const HPReal half_pi = pi() / 2;
    const long step = level == 0 ? 1 : 2;
    const long kmax = static_cast<long>(t_max(bits) * std::ldexp(1.0, level));
    for (long k = level == 0 ? 0 : 1; k <= kmax; k += step) {
        const HPReal t = h * k;
        const HPReal e = exp(2 * half_pi * sinh(t));
        const HPReal near = 1 / (1 + e);
        const HPReal far = e / (1 + e);
        const HPReal w = 2 * half_pi * cosh(t) * near * far;
        nodes->push_back({near, far, w});
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(level, bits), nodes).first->second;
}

struct Evaluator {
    const WeightedIntegrand& f;
    HPReal core_tol;

    // y is the quadrature variable (x, or u in the kta frame); ybar = 1 - y
    ValueWithBound operator()(const HPReal& y, const HPReal& ybar) const {
        HPReal x, omx, u;
        HPReal extra = 1;
        if (f.kta_frame) {
            u = y;
            x = ybar / (1 + y);
            omx = 2 * y / (1 + y);
            extra = 2 / ((1 + y) * (1 + y));
        } else {
            x = y;
            omx = ybar;
            u = omx / (1 + x);
        }
        ValueWithBound core = ValueWithBound::exact(HPReal(1));
        switch (f.core) {
            case WeightedIntegrand::Core::mpl:
                core = omx <= HPReal(1) / 2 ? mpl_complement(f.index, omx, core_tol) : mpl(f.index, x, core_tol);
                break;
            case WeightedIntegrand::Core::mpl_landen:
                core = omx <= HPReal(1) / 2 ? mpl_landen_complement(f.index, omx, core_tol)
                                            : mpl_landen(f.index, x, core_tol);
                break;
            case WeightedIntegrand::Core::kta: core = kta_from_u(f.index, u, core_tol); break;
            case WeightedIntegrand::Core::monomial:
                core = ValueWithBound::exact(pow_int(x, f.monomial_power));
                break;
            case WeightedIntegrand::Core::constant: break;
        }
        const HPReal& second = f.kta_frame ? u : omx;
        HPReal w = extra;
        if (f.x_exp != 0) w *= pow(x, f.x_exp);
        if (f.omx_exp != 0) w *= pow(second, f.omx_exp);
        if (f.logx_pow > 0) w *= pow_int(log(x), f.logx_pow);
        if (f.logomx_pow > 0) w *= pow_int(log(second), f.logomx_pow);
        return w * core;
    }
};

// order of vanishing of the core at x = 0
int core_power_at_zero(const WeightedIntegrand& f) {
    switch (f.core) {
        case WeightedIntegrand::Core::mpl:
        case WeightedIntegrand::Core::mpl_landen: return 1;
        case WeightedIntegrand::Core::kta: return f.index.depth();
        case WeightedIntegrand::Core::monomial: return f.monomial_power;
        case WeightedIntegrand::Core::constant: return 0;
    }
    return 0;
}

// power of log(1-x) the core can grow with at x = 1
int core_log_at_one(const WeightedIntegrand& f) {
    if (f.core == WeightedIntegrand::Core::mpl_landen) return f.index.weight();
    if (f.core == WeightedIntegrand::Core::mpl || f.core == WeightedIntegrand::Core::kta) {
        int lead = 0;
        while (lead < f.index.depth() && f.index[lead] == 1) ++lead;
        return lead;
    }
    return 0;
}

struct Endpoint {
    HPReal exponent;
    int log_power;
};

// approximately int_0^eps d^e |log d|^P dd, expressed relative to eps * |F(eps)|
HPReal envelope_factor(const Endpoint& ep, const HPReal& eps) {
    const HPReal e1 = ep.exponent + 1;
    const HPReal L = abs(log(eps));
    HPReal s = 0, term = 1;
    for (int i = 0; i <= ep.log_power; ++i) {
        s += term;
        term *= HPReal(ep.log_power - i) / (e1 * L);
    }
    return s / e1;
}

}  // namespace

ValueWithBound de_quad(const WeightedIntegrand& f, const HPReal& tol, const QuadOptions& opt) {
    // integrability at each end of the quadrature variable
    const HPReal a_eff = f.x_exp + core_power_at_zero(f);
    const int lx = f.logx_pow;
    const int lo = f.logomx_pow + core_log_at_one(f);
    Endpoint left, right;
    if (f.kta_frame) {
        left = {f.omx_exp, lo};  // u -> 0 is x -> 1
        right = {a_eff, lx};
    } else {
        left = {a_eff, lx};
        right = {f.omx_exp, lo};
    }
    if (!(left.exponent > -1) || !(right.exponent > -1))
        throw DomainError("de_quad: integrand is not integrable (endpoint exponent <= -1)");

    Evaluator eval{f, tol * HPReal(1e-4)};
    const int bits = current_bits();
    const HPReal floor_eps = ldexp(HPReal(1), -8 * bits);

    // clamp width per side: start at 2^{-bits/2} and shrink while the envelope is too large
    auto clamp = [&](const Endpoint& ep, bool at_left, HPReal& env) {
        HPReal eps = ldexp(HPReal(1), -bits / 2);
        while (true) {
            const ValueWithBound v = at_left ? eval(eps, 1 - eps) : eval(1 - eps, eps);
            env = abs(v.value) * eps * envelope_factor(ep, eps);
            if (env <= tol / 16 || eps * eps < floor_eps) return eps;
            eps = eps * eps;
        }
    };
    HPReal env_left, env_right;
    const HPReal eps_left = clamp(left, true, env_left);
    const HPReal eps_right = clamp(right, false, env_right);

    HPReal sum = 0, core_err = 0, prev = 0;
    for (int level = 0; level <= opt.max_levels; ++level) {
        const auto nodes = level_nodes(level);
        for (std::size_t i = 0; i < nodes->size(); ++i) {
            const Node& nd = (*nodes)[i];
            const bool centre = (level == 0 && i == 0);
            // t > 0 side: y = far (near 1); t < 0 side: y = near
            if (nd.near >= eps_right) {
                const ValueWithBound v = eval(nd.far, nd.near);
                sum += nd.weight * v.value;
                core_err += nd.weight * v.abs_error;
            }
            if (!centre && nd.near >= eps_left) {
                const ValueWithBound v = eval(nd.near, nd.far);
                sum += nd.weight * v.value;
                core_err += nd.weight * v.abs_error;
            }
        }
        const HPReal h = ldexp(HPReal(1), -level);
        const HPReal est = h * sum;
        if (opt.level_estimates) opt.level_estimates->push_back(est);
        if (level >= opt.min_levels) {
            const HPReal delta = abs(est - prev);
            if (delta <= tol / 2) return {est, delta + env_left + env_right + h * core_err, false};
        }
        prev = est;
    }
    throw NoConvergence("de_quad: no convergence after " + std::to_string(opt.max_levels) + " levels");
}

ValueWithBound int_mpl_weighted(const Composition& k, const HPReal& alpha, const HPReal& beta, int p, int q,
                                const HPReal& tol) {
    WeightedIntegrand f;
    f.core = WeightedIntegrand::Core::mpl;
    f.index = k;
    f.x_exp = -alpha;
    f.omx_exp = -beta;
    f.logx_pow = p;
    f.logomx_pow = q;
    return de_quad(f, tol);
}

ValueWithBound int_kta_weighted(const Composition& k, const HPReal& alpha, int q, const HPReal& tol) {
    WeightedIntegrand f;
    f.core = WeightedIntegrand::Core::kta;
    f.index = k;
    f.x_exp = -1;
    f.omx_exp = -alpha;
    f.logomx_pow = q;
    f.kta_frame = true;
    return de_quad(f, tol);
}

}  // namespace hz
