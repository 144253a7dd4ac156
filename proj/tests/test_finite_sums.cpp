#include "hzeta/errors.hpp"
#include "hzeta/finite_sums.hpp"
#include "hzeta/specfun.hpp"

#include <doctest.h>

using namespace hz;

namespace {

const HPReal& tight() {
    static const HPReal t("1e-60");
    return t;
}

// direct enumeration of n >= n_1 > n_2 > ... (or >=) with (n_j + a - 1)^{-k_j}
HPReal brute(long n, const Composition& k, const HPReal& a, bool star, int slot = 0) {
    if (slot == k.depth()) return HPReal(1);
    HPReal s = 0;
    for (long m = 1; m <= n; ++m) s += pow_int(m + a - 1, -k[slot]) * brute(star ? m : m - 1, k, a, star, slot + 1);
    return s;
}

const std::vector<HPReal>& shifts() {
    static const std::vector<HPReal> v{HPReal(1), HPReal(1) / 2, HPReal(1) / 3};
    return v;
}

// k-th derivative by the central difference stencil plus one Richardson step
template <class F>
HPReal derivative(F f, const HPReal& x, int k) {
    auto stencil = [&](const HPReal& h) {
        HPReal s = 0;
        for (int i = 0; i <= k; ++i) {
            const HPReal c = HPReal(binomial(k, i).convert_to<long>()) * (i % 2 ? -1 : 1);
            s += c * f(x + (HPReal(k) / 2 - i) * h);
        }
        return s / pow_int(h, k);
    };
    const HPReal h("1e-12");
    return (4 * stencil(h / 2) - stencil(h)) / 3;
}

}  // namespace

TEST_CASE("mhs and mhss examples") {
    PrecisionScope scope(PrecisionConfig{});
    CHECK(mhs(1, {2, 1}, ShiftVector::constant(HPReal("0.3"), 2)) == 0);
    CHECK(mhs(0, Composition{}) == 1);
    CHECK(mhss(0, Composition{}) == 1);
    CHECK(abs(mhs(3, {1}, HPReal(1)) - HPReal(11) / 6) < tight());
    CHECK(abs(mhss(2, {1, 1}, HPReal(1)) - HPReal(7) / 4) < tight());
    CHECK(abs(mhss(1, {1, 1}, HPReal(1)) - 1) < tight());
    CHECK(abs(mhs(3, {1, 1}, HPReal(1)) - 1) < tight());
    CHECK_THROWS_AS(mhs(3, {2}, HPReal(0)), PoleError);
}

TEST_CASE("ones_sums") {
    PrecisionScope scope(PrecisionConfig{});
    const OnesSums z = ones_sums(2, 1, HPReal(1));
    CHECK(z.plain[0] == 1);
    CHECK(z.star[0] == 1);
    CHECK(abs(z.plain[1] - HPReal(3) / 2) < tight());
    CHECK(abs(z.star[1] - HPReal(3) / 2) < tight());
    for (const HPReal& a : shifts())
        for (long n = 0; n <= 30; n += 3) {
            const OnesSums o = ones_sums(n, 5, a);
            for (int k = 1; k <= 5; ++k) {
                CHECK(abs(o.plain[k] - mhs(n, Composition::ones(k), a)) < tight());
                CHECK(abs(o.star[k] - mhss(n, Composition::ones(k), a)) < tight());
            }
        }
}

TEST_CASE("nested sums match brute enumeration") {
    PrecisionScope scope(PrecisionConfig{});
    for (const HPReal& a : shifts())
        for (int w = 1; w <= 5; ++w)
            for (const auto& k : compositions_of(w)) {
                if (k.depth() > 3) continue;
                for (long n : {0L, 1L, 4L, 9L}) {
                    CHECK(abs(mhs(n, k, a) - brute(n, k, a, false)) < tight());
                    CHECK(abs(mhss(n, k, a) - brute(n, k, a, true)) < tight());
                }
            }
}

TEST_CASE("stuffle and inclusion-exclusion up to n = 50") {
    PrecisionScope scope(PrecisionConfig{});
    for (const HPReal& a : shifts()) {
        const ShiftVector aa = ShiftVector::constant(a, 2);
        for (int x = 1; x <= 4; ++x)
            for (int y = 1; y <= 4; ++y)
                for (long n = 0; n <= 50; ++n) {
                    const HPReal lhs = mhs(n, {x}, a) * mhs(n, {y}, a);
                    const HPReal rhs = mhs(n, {x, y}, aa) + mhs(n, {y, x}, aa) + mhs(n, {x + y}, a);
                    CHECK(abs(lhs - rhs) < tight() * (1 + abs(lhs)));
                    CHECK(abs(mhss(n, {x, y}, aa) - mhs(n, {x, y}, aa) - mhs(n, {x + y}, a)) < tight());
                }
    }
}

TEST_CASE("power-sum recursions A_m = m! B_m and their alternating analogue") {
    PrecisionScope scope(PrecisionConfig{});
    for (const HPReal& a : {HPReal(1), HPReal(1) / 2, HPReal("0.3")})
        for (long n = 1; n <= 20; ++n) {
            std::vector<HPReal> p(6, HPReal(0));
            for (long i = 1; i <= n; ++i)
                for (int j = 1; j <= 5; ++j) p[j] += pow_int(1 / (i + a - 1), j);
            std::vector<HPReal> A(6), Ab(6);
            A[0] = Ab[0] = 1;
            for (int m = 1; m <= 5; ++m) {
                A[m] = Ab[m] = 0;
                for (int i = 0; i < m; ++i) {
                    A[m] += A[i] / factorial(i) * p[m - i];
                    Ab[m] += (i % 2 ? -1 : 1) * Ab[i] / factorial(i) * p[m - i];
                }
                A[m] *= factorial(m - 1);
                Ab[m] *= factorial(m - 1) * ((m - 1) % 2 ? -1 : 1);
                const HPReal B = brute(n, Composition::ones(m), a, true);
                const HPReal Bb = brute(n, Composition::ones(m), a, false);
                CHECK(abs(A[m] - factorial(m) * B) < tight() * (1 + abs(A[m])));
                CHECK(abs(Ab[m] - factorial(m) * Bb) < tight() * (1 + abs(Ab[m])));
            }
            const OnesSums o = ones_from_power_sums(p, 5);
            for (int m = 1; m <= 5; ++m) {
                CHECK(abs(o.star[m] * factorial(m) - A[m]) < tight() * (1 + abs(A[m])));
                CHECK(abs(o.plain[m] * factorial(m) - Ab[m]) < tight() * (1 + abs(Ab[m])));
            }
        }
}

TEST_CASE("derivatives of the parametric binomials") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal alpha("0.3");
    const HPReal tol("1e-8");
    for (long n = 1; n <= 10; ++n)
        for (int k = 1; k <= 3; ++k) {
            const HPReal d = derivative([n](const HPReal& a) { return gen_binom(n + a - 1, HPReal(n)); }, alpha, k);
            const HPReal v = factorial(k) * gen_binom(n + alpha - 1, HPReal(n)) * mhs(n, Composition::ones(k), alpha);
            CHECK(abs(d - v) < tol * (1 + abs(v)));

            const HPReal dr = derivative([n](const HPReal& a) { return 1 / gen_binom(n - a, HPReal(n)); }, alpha, k);
            const HPReal vr = factorial(k) * mhss(n, Composition::ones(k), 1 - alpha) / gen_binom(n - alpha, HPReal(n));
            CHECK(abs(dr - vr) < tol * (1 + abs(vr)));
        }
}

TEST_CASE("t sums") {
    PrecisionScope scope(PrecisionConfig{});
    CHECK(abs(t_sums(1, {1}).first - 1) < tight());
    CHECK(abs(t_sums(2, {2}).first - HPReal(10) / 9) < tight());
    CHECK(abs(t_sums(2, {1, 1}).first - HPReal(1) / 3) < tight());
    for (long n = 1; n <= 12; ++n)
        for (const Composition& k : {Composition{2}, Composition{1, 2}, Composition{2, 1, 1}}) {
            const auto [t, ts] = t_sums(n, k);
            const HPReal scale = pow_int(HPReal(2), -k.weight());
            CHECK(abs(t - scale * brute(n, k, HPReal(1) / 2, false)) < tight());
            CHECK(abs(ts - scale * brute(n, k, HPReal(1) / 2, true)) < tight());
        }
}
