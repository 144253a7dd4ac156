#pragma once

// helpers shared by the identities_sec*.cpp files

#include "hzeta/compositions.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/finite_sums.hpp"
#include "hzeta/identity_registry.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/series_engine.hpp"
#include "hzeta/specfun.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hz::ids {

HPReal real_param(const Params& p, const std::string& name);
int int_param(const Params& p, const std::string& name);
Composition index_param(const Params& p, const std::string& name);

// DomainError naming the parameter
void require(bool ok, const std::string& name, const std::string& what);
bool is_integer(const HPReal& x);
void require_nonint(const Params& p, const std::string& name);

HPReal big(const BigInt& b);
HPReal sign(int e);  // (-1)^e
ValueWithBound rounded(const HPReal& v);  // closed-form value with a few ulps of slack

// product of two tolerances-aware values is ValueWithBound * ValueWithBound; this sums c_i v_i
struct Combination {
    ValueWithBound total = ValueWithBound::exact(HPReal(0));
    void add(const HPReal& c, const ValueWithBound& v) { total = total + c * v; }
};

enum class Family { zeta, zeta_star, T };
// sum_{|j|=kk, dep j = dep kappa} B(kappa; j) X(kappa + j; shift)
ValueWithBound binom_weighted_sum(Family f, const Composition& kappa, int kk, const HPReal& shift,
                                  const HPReal& tol);

// sum_n zeta_{n-1}(a) zeta*_n(b) / n^w
ValueWithBound ky_sum(const Composition& a, const Composition& b, int w, const HPReal& tol);

// sum_n zeta_{n-1}(idx; 1-beta) / ((n-beta)(n-alpha-beta))
ValueWithBound shifted_pair_sum(const Composition& idx, const HPReal& alpha, const HPReal& beta,
                                const HPReal& tol);

// sum over c_1+2c_2+...+pc_p = p of prod (-1)^{(j-1)c_j}/(c_j! j^{c_j}) times the sum over
// weak compositions of k into |c| blocks of prod binom(im-1+k_j, k_j) zeta(im+k_j; 1-alpha)
ValueWithBound cycle_sum(int m, int p, int k, const HPReal& alpha);

// f(0) from f at 1e-4, 1e-5, 1e-6 (quadratic fit); throws unless the observed order is ~1
ValueWithBound limit_at_zero(const std::function<ValueWithBound(const HPReal&)>& f, std::string& note);

// running power sums of 1/(i+a-1), i = 1..n
struct OnesTracker {
    HPReal a;
    int kmax;
    std::vector<HPReal> p;
    long n = 0;

    OnesTracker(const HPReal& shift, int k) : a(shift), kmax(k), p(k + 1, HPReal(0)) {}
    void advance();
    HPReal plain(int k) const;
    HPReal star(int k) const;
};

// rows of values for the given keys
std::vector<Params> make_samples(const std::vector<std::string>& keys,
                                 const std::vector<std::vector<std::string>>& rows);

inline Route series_route(std::string name, std::function<RouteSides(const HPReal&)> f) {
    return Route{std::move(name), false, std::move(f)};
}
inline Route quad_route(std::string name, std::function<RouteSides(const HPReal&)> f) {
    return Route{std::move(name), true, std::move(f)};
}

void register_sec2(Registry& r);
void register_sec3(Registry& r);
void register_sec4(Registry& r);
void register_sec5(Registry& r);
void register_sec6_7(Registry& r);

}  // namespace hz::ids
