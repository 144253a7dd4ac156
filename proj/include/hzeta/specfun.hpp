#pragma once

#include "hzeta/hpreal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hz {

using BigRational = boost::multiprecision::cpp_rational;

HPReal pi();
HPReal euler_gamma();

// B_n as an exact rational (B_1 = -1/2)
const BigRational& bernoulli(int n);

HPReal gamma_log(const HPReal& x);
HPReal digamma(const HPReal& x);
HPReal polygamma(int m, const HPReal& x);
HPReal pochhammer(const HPReal& a, int n);
HPReal gen_binom(const HPReal& a, const HPReal& b);
HPReal beta(const HPReal& a, const HPReal& b);
// d^{p+q} B / da^p db^q
HPReal beta_partial(int p, int q, const HPReal& a, const HPReal& b);
// sum_{n>=0} (n+a)^{-s}
HPReal hurwitz_zeta(int s, const HPReal& a);
// Riemann zeta at an integer s >= 2
HPReal zeta_int(int s);

HPReal factorial(int n);
HPReal pow_int(const HPReal& x, int e);

}  // namespace hz
