#include "hzeta/specfun.hpp"

#include "hzeta/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace hz {

namespace {

std::mutex bernoulli_mutex;
std::deque<BigRational> bernoulli_table;  // deque keeps references stable on growth

// asymptotic expansions start at z >= this; also the Euler-Maclaurin shift target
long shift_target(const HPReal& x) {
    const long base = std::max(50L, static_cast<long>(0.35 * current_bits()));
    const double xd = static_cast<double>(x);
    if (xd >= base) return 0;
    return static_cast<long>(std::ceil(base - xd));
}

HPReal to_hp(const BigRational& q) {
    return HPReal(boost::multiprecision::numerator(q)) / HPReal(boost::multiprecision::denominator(q));
}

void require_positive(const HPReal& x, const char* fn) {
    if (!(x > 0)) throw DomainError(std::string(fn) + ": argument must be positive, got " + to_decimal(x, 17));
}

}  // namespace

HPReal pi() { return boost::math::constants::pi<HPReal>(); }

HPReal euler_gamma() {
    static std::shared_mutex mtx;
    static std::map<unsigned, HPReal> cache;
    const unsigned key = HPReal::default_precision();
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    HPReal g = -digamma(HPReal(1));
    std::unique_lock lock(mtx);
    cache.emplace(key, g);
    return g;
}

const BigRational& bernoulli(int n) {
    if (n < 0) throw DomainError("bernoulli: negative index");
    std::lock_guard lock(bernoulli_mutex);
    if (bernoulli_table.empty()) bernoulli_table.emplace_back(1);
    while (static_cast<int>(bernoulli_table.size()) <= n) {
        const int m = static_cast<int>(bernoulli_table.size());
        BigRational s = 0;
        boost::multiprecision::cpp_int c = 1;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            s += BigRational(c) * bernoulli_table[j];
            c = c * (m + 1 - j) / (j + 1);
        }
        bernoulli_table.emplace_back(-s / (m + 1));
    }
    return bernoulli_table[n];
}

HPReal factorial(int n) {
    HPReal r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

HPReal pow_int(const HPReal& x, int e) {
    if (e < 0) return 1 / pow_int(x, -e);
    HPReal r = 1, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

HPReal gamma_log(const HPReal& x) {
    require_positive(x, "gamma_log");
    const long m = shift_target(x);
    HPReal prod = 1;
    for (long i = 0; i < m; ++i) prod *= x + i;
    const HPReal z = x + m;
    HPReal s = (z - HPReal(0.5)) * log(z) - z + log(2 * pi()) / 2;
    const HPReal eps = epsilon();
    const HPReal z2 = z * z;
    HPReal zp = z;
    for (int j = 1; j < 400; ++j) {
        HPReal t = to_hp(bernoulli(2 * j)) / (HPReal(2 * j) * (2 * j - 1) * zp);
        s += t;
        if (abs(t) < eps * abs(s) || abs(t) < eps) break;
        zp *= z2;
    }
    return s - log(prod);
}

HPReal digamma(const HPReal& x) {
    require_positive(x, "digamma");
    const long m = shift_target(x);
    HPReal corr = 0;
    for (long i = 0; i < m; ++i) corr += 1 / (x + i);
    const HPReal z = x + m;
    HPReal s = log(z) - 1 / (2 * z);
    const HPReal eps = epsilon();
    const HPReal z2 = z * z;
    HPReal zp = z2;
    for (int j = 1; j < 400; ++j) {
        HPReal t = to_hp(bernoulli(2 * j)) / (HPReal(2 * j) * zp);
        s -= t;
        if (abs(t) < eps * abs(s)) break;
        zp *= z2;
    }
    return s - corr;
}

HPReal hurwitz_zeta(int s, const HPReal& a) {
    if (s < 2) throw DomainError("hurwitz_zeta: exponent must be >= 2");
    if (a <= 0 && a == floor(a)) throw PoleError("hurwitz_zeta: pole at a = " + to_decimal(a, 6));
    require_positive(a, "hurwitz_zeta");
    const long m = shift_target(a);
    HPReal head = 0;
    for (long i = 0; i < m; ++i) head += pow_int(a + i, -s);
    const HPReal z = a + m;
    const HPReal zs = pow_int(z, -s);
    HPReal sum = head + z * zs / (s - 1) + zs / 2;
    const HPReal eps = epsilon();
    // term_j = B_{2j}/(2j)! (s)_{2j-1} z^{-s-2j+1}
    HPReal rising = s;  // (s)_{2j-1}
    HPReal fact = 2;    // (2j)!
    HPReal zpow = zs / z;
    const HPReal zinv2 = 1 / (z * z);
    for (int j = 1; j < 400; ++j) {
        HPReal t = to_hp(bernoulli(2 * j)) / fact * rising * zpow;
        sum += t;
        if (abs(t) < eps * abs(sum)) break;
        rising *= HPReal(s + 2 * j - 1) * (s + 2 * j);
        fact *= HPReal(2 * j + 1) * (2 * j + 2);
        zpow *= zinv2;
    }
    return sum;
}

HPReal zeta_int(int s) { return hurwitz_zeta(s, HPReal(1)); }

HPReal polygamma(int m, const HPReal& x) {
    if (m < 0) throw DomainError("polygamma: negative order");
    require_positive(x, "polygamma");
    if (m == 0) return digamma(x);
    HPReal r = factorial(m) * hurwitz_zeta(m + 1, x);
    return (m % 2 == 1) ? r : HPReal(-r);
}

HPReal pochhammer(const HPReal& a, int n) {
    if (n < 0) throw DomainError("pochhammer: negative length");
    HPReal r = 1;
    for (int i = 0; i < n; ++i) r *= a + i;
    return r;
}

HPReal gen_binom(const HPReal& a, const HPReal& b) {
    if (!(a + 1 > 0) || !(b + 1 > 0) || !(a - b + 1 > 0))
        throw DomainError("gen_binom: arguments outside the positive-gamma regime");
    return exp(gamma_log(a + 1) - gamma_log(b + 1) - gamma_log(a - b + 1));
}

HPReal beta(const HPReal& a, const HPReal& b) {
    require_positive(a, "beta");
    require_positive(b, "beta");
    return exp(gamma_log(a) + gamma_log(b) - gamma_log(a + b));
}

// D(p,q) = d_a^p d_b^q B; d_a B = B g with g = psi(a) - psi(a+b), d_b B = B h with
// h = psi(b) - psi(a+b). Leibniz on B g (or B h) gives a triangular recurrence.
HPReal beta_partial(int p, int q, const HPReal& a, const HPReal& b) {
    if (p < 0 || q < 0) throw DomainError("beta_partial: negative order");
    require_positive(a, "beta_partial");
    require_positive(b, "beta_partial");
    const int n = p + q;
    std::vector<HPReal> pa(n), pb(n), pab(n);
    for (int i = 0; i < n; ++i) {
        pa[i] = polygamma(i, a);
        pb[i] = polygamma(i, b);
        pab[i] = polygamma(i, a + b);
    }
    std::vector<std::vector<HPReal>> D(p + 1, std::vector<HPReal>(q + 1));
    std::vector<std::vector<HPReal>> binom(n + 1, std::vector<HPReal>(n + 1, HPReal(0)));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : HPReal(0));
    }
    D[0][0] = beta(a, b);
    for (int v = 1; v <= q; ++v) {
        HPReal s = 0;
        for (int j = 0; j < v; ++j) {
            const int o = v - 1 - j;
            s += binom[v - 1][j] * D[0][j] * (pb[o] - pab[o]);
        }
        D[0][v] = s;
    }
    for (int u = 1; u <= p; ++u) {
        for (int v = 0; v <= q; ++v) {
            HPReal s = 0;
            for (int i = 0; i < u; ++i) {
                for (int j = 0; j <= v; ++j) {
                    const int du = u - 1 - i, dv = v - j;
                    HPReal g = -pab[du + dv];
                    if (dv == 0) g += pa[du];
                    s += binom[u - 1][i] * binom[v][j] * D[i][j] * g;
                }
            }
            D[u][v] = s;
        }
    }
    return D[p][q];
}

}  // namespace hz
