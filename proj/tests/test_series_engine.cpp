#include "hzeta/errors.hpp"
#include "hzeta/series_engine.hpp"
#include "hzeta/specfun.hpp"

#include <doctest.h>

using namespace hz;

namespace {

const HPReal& tol() {
    static const HPReal t("1e-20");
    return t;
}

HPReal pi_oracle() { return 4 * atan(HPReal(1)); }

const HPReal& zeta3() {
    static const HPReal z("1.2020569031595942853997381615114499907649862923404988817922715553418382057863");
    return z;
}

bool close(const ValueWithBound& v, const HPReal& expected, const HPReal& t) {
    return abs(v.value - expected) <= t + v.abs_error;
}

// all ways of merging adjacent parts of k
std::vector<Composition> contractions(const Composition& k) {
    std::vector<Composition> out;
    const int gaps = k.depth() - 1;
    for (int mask = 0; mask < (1 << gaps); ++mask) {
        std::vector<int> parts{k[0]};
        for (int g = 0; g < gaps; ++g) {
            if (mask >> g & 1) parts.back() += k[g + 1];
            else parts.push_back(k[g + 1]);
        }
        out.emplace_back(parts);
    }
    return out;
}

// sum_{n_1 > n_2 > ...} y^{n_1} / prod n_j^{k_j}, truncated at n_1 <= N
HPReal li_direct(const Composition& k, const HPReal& y, long N) {
    std::vector<HPReal> inner(k.depth() + 1, HPReal(0));
    // inner[j] = sum over n_{j+1} > ... with n_{j+1} < current n
    inner[k.depth()] = 1;
    HPReal total = 0, yn = 1;
    std::vector<HPReal> acc(k.depth() + 1, HPReal(0));
    acc[k.depth()] = 1;
    for (long n = 1; n <= N; ++n) {
        yn *= y;
        std::vector<HPReal> add(k.depth(), HPReal(0));
        for (int j = 0; j < k.depth(); ++j) add[j] = acc[j + 1] / pow_int(HPReal(n), k[j]);
        total += yn * add[0];
        for (int j = 0; j < k.depth(); ++j) acc[j] += add[j];
    }
    return total;
}

}  // namespace

TEST_CASE("depth one agrees with hurwitz_zeta") {
    PrecisionScope scope(PrecisionConfig{});
    for (int s = 2; s <= 4; ++s)
        for (const HPReal& a : {HPReal(1), HPReal(1) / 2, HPReal("0.7")}) {
            const ValueWithBound v = htmzv(Composition{s}, a, tol());
            CHECK(close(v, hurwitz_zeta(s, a), tol()));
            CHECK(close(htmzsv(Composition{s}, a, tol()), v.value, tol()));
        }
    CHECK(close(htmzv(Composition{2}, HPReal(1), tol()), pi_oracle() * pi_oracle() / 6, tol()));
    CHECK(close(htmzv(Composition{2}, HPReal(1) / 2, tol()), pi_oracle() * pi_oracle() / 2, tol()));
}

TEST_CASE("duality anchors") {
    PrecisionScope scope(PrecisionConfig{});
    CHECK(close(htmzv({2, 1}, HPReal(1), tol()), zeta3(), tol()));
    CHECK(close(htmzsv({2, 1}, HPReal(1), tol()), 2 * zeta3(), tol()));
    const HPReal pi4 = pow_int(pi_oracle(), 4);
    CHECK(close(htmzsv({2, 2}, HPReal(1), tol()), pi4 * 3 / 360 + pi4 / 90, tol()));
}

TEST_CASE("star sums are sums over contractions") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-10");
    for (const HPReal& a : {HPReal(1), HPReal(1) / 2, HPReal("0.3")})
        for (const Composition& k : {Composition{2, 1}, Composition{3, 2}, Composition{2, 1, 1}, Composition{2, 2, 1},
                                     Composition{3, 1, 2}}) {
            HPReal sum = 0, err = 0;
            for (const auto& c : contractions(k)) {
                const ValueWithBound v = htmzv(c, a, t / 10);
                sum += v.value;
                err += v.abs_error;
            }
            const ValueWithBound s = htmzsv(k, a, t / 10);
            CHECK(abs(s.value - sum) <= t + s.abs_error + err);
        }
}

TEST_CASE("T-values") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal pi2 = pi_oracle() * pi_oracle();
    CHECK(close(htmtv({2}, HPReal(1), tol()), pi2 / 4, tol()));
    CHECK(close(htmtv({2}, HPReal(1), tol()), 2 * pi2 / 8, tol()));
    // shifts (j+1-r)/2 turn the r-variable zeta into 2^{|k|-r} T(k)
    const HPReal t("1e-8");
    const ValueWithBound z = htmzv({2, 1}, ShiftVector({HPReal(0), HPReal(1) / 2}), t);
    const ValueWithBound tv = htmtv({2, 1}, HPReal(1), t);
    CHECK(abs(z.value - 2 * tv.value) <= t + z.abs_error + 2 * tv.abs_error);
}

TEST_CASE("polylogarithms") {
    PrecisionScope scope(PrecisionConfig{});
    CHECK(close(mpl({1}, HPReal("0.5"), tol()), log(HPReal(2)), tol()));
    const HPReal x("0.3");
    CHECK(close(mpl(Composition::ones(3), x, tol()), pow_int(-log(1 - x), 3) / 6, tol()));
    CHECK(close(mpl({2}, HPReal(1), HPReal("1e-10")), pi_oracle() * pi_oracle() / 6, HPReal("1e-10")));
    CHECK(close(mpl({2, 1}, HPReal("0.4"), tol()), li_direct({2, 1}, HPReal("0.4"), 400), tol()));
}

TEST_CASE("Landen form") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-12");
    CHECK(close(mpl_landen({1}, HPReal("0.5"), t), -log(HPReal(2)), t));
    CHECK(close(mpl_landen({1}, HPReal("0.3"), t), -mpl({1}, HPReal("0.3"), t).value, t));
    for (const HPReal& x : {HPReal("0.1"), HPReal("0.3"), HPReal("0.45")})
        for (const Composition& k : {Composition{1}, Composition{2}, Composition{3}, Composition{1, 2}, Composition{2, 1},
                                     Composition{1, 1}}) {
            const HPReal y = x / (x - 1);
            CHECK(close(mpl_landen(k, x, t), li_direct(k, y, 1500), t));
        }
}

TEST_CASE("A-functions") {
    PrecisionScope scope(PrecisionConfig{});
    CHECK(close(kta({1}, HPReal("0.5"), tol()), log(HPReal(3)), tol()));
    CHECK(close(kta({2}, HPReal(1), HPReal("1e-10")), pi_oracle() * pi_oracle() / 4, HPReal("1e-10")));
    // A(1,1;x) = 4 sum over even n_1 > odd n_2 of x^{n_1}/(n_1 n_2)
    const HPReal x("0.5");
    HPReal brute = 0, odd = 0, xn = 1;
    for (long n = 1; n <= 400; ++n) {
        xn *= x;
        if (n % 2) odd += HPReal(1) / n;
        else brute += 4 * xn * odd / n;
    }
    CHECK(close(kta({1, 1}, x, tol()), brute, tol()));
}

TEST_CASE("Apery-type series") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-15");
    const HPReal pi4 = pow_int(pi_oracle(), 4);
    CHECK(close(apery_I({2}, 1, HPReal(0), t), pi4 / 72, t));
    CHECK(close(apery_I({2}, 0, HPReal(0), t), zeta3(), t));
    const HPReal half("0.5");
    const ValueWithBound rhs =
        2 * htmzv({3, 1}, half, t) + htmzv({2, 2}, half, t);
    CHECK(close(apery_I({2}, 1, half, t), rhs.value, t + rhs.abs_error));

    const HPReal a = HPReal(1) / 3;
    CHECK(close(apery_II(1, {}, 1, a, t), hurwitz_zeta(2, 1 - a), t));
    CHECK(close(apery_II(0, {}, 1, a, t), -(digamma(1 - a) + euler_gamma()), t));
    const ValueWithBound r2 = ValueWithBound::exact(zeta_int(2)) * htmzv({2}, 1 - a, t) -
                              HPReal(2) * htmzv({3, 1}, 1 - a, t) - htmzv({2, 2}, 1 - a, t);
    CHECK(close(apery_II(1, {1}, 2, a, t), r2.value, t + r2.abs_error));

    // k = l = empty, m = 0: sum binom(n+a-1,n)/(n^2 binom(n-b,n)) against its terms summed directly
    const ValueWithBound v3 = apery_III({}, {}, 0, HPReal("0.25"), HPReal("0.25"), t);
    HPReal direct = 0, ratio = 1;
    for (long n = 1; n <= 100000; ++n) {
        ratio *= (n - HPReal("0.75")) / (n - HPReal("0.25"));
        direct += ratio / (HPReal(n) * n);
    }
    CHECK(abs(v3.value - direct) < HPReal("1e-6"));
}

TEST_CASE("Apery limit at alpha -> 0 is first order") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-20");
    const HPReal limit = 2 * zeta3();  // sum zeta*_n(1)/n^2
    std::vector<HPReal> gaps;
    for (int d = 4; d <= 6; ++d) {
        const HPReal alpha = pow_int(HPReal(10), -d);
        gaps.push_back(abs(apery_II(1, {1}, 1, alpha, t).value - limit));
    }
    for (int i = 0; i + 1 < 3; ++i) {
        const HPReal ratio = gaps[i] / gaps[i + 1];
        CHECK(ratio > 7);
        CHECK(ratio < 13);
    }
}

TEST_CASE("Euler-type sums") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-15");
    CHECK(close(param_euler_sum(0, HPReal(1), HPReal(0), t), HPReal(1), t));
    CHECK(close(param_euler_pow(1, 1, HPReal(0), t), zeta3(), t));
    // m = 1, (a, b) = (alpha, 0): sum H_{n-1}/((n+alpha) n) against a termwise oracle
    const HPReal al("0.4");
    HPReal h = 0, s = 0;
    for (long n = 1; n <= 4000; ++n) {
        s += h / ((n + al) * n);
        h += HPReal(1) / n;
    }
    // tail ~ log N / N
    CHECK(abs(param_euler_sum(1, al, HPReal(0), t).value - s) < HPReal("3e-3"));
}

TEST_CASE("Arakawa-Kaneko values") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-15");
    const HPReal pi4 = pow_int(pi_oracle(), 4);
    CHECK(close(arakawa_kaneko(AKKind::xi, 1, {2}, t), zeta3(), t));
    CHECK(close(arakawa_kaneko(AKKind::xi, 1, {2, 1}, t), pi4 / 360, t));
    CHECK(close(arakawa_kaneko(AKKind::xi, 2, {2}, t), apery_I({2}, 1, HPReal(0), t).value, 2 * t));
}

TEST_CASE("zeta^(alpha)") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-15");
    const HPReal a = HPReal(1) / 3, b = HPReal(1) / 4;
    CHECK(close(htmzv_pbc(a, {1}, 1 - b, t), beta(1 - a, 1 - b), t));
    CHECK(close(htmzv_pbc(a, {2}, 1 - b, t), -beta_partial(0, 1, 1 - a, 1 - b), t));
    // alpha = 0 pins n_r = 1
    CHECK(close(htmzv_pbc(HPReal(0), {2, 1}, HPReal(1), t), zeta_int(2) - 1, t));
}

TEST_CASE("doubling n_max stays inside the reported error") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-12");
    TailStrategy small;
    small.n_max = 20000;
    TailStrategy big = small;
    big.n_max = 40000;
    for (const Composition& k : {Composition{2}, Composition{2, 1}, Composition{3, 1, 1}}) {
        const ValueWithBound u = htmzv(k, HPReal("0.3"), t, small);
        const ValueWithBound v = htmzv(k, HPReal("0.3"), t, big);
        CHECK(abs(u.value - v.value) <= u.abs_error + v.abs_error);
    }
}

TEST_CASE("domain errors") {
    PrecisionScope scope(PrecisionConfig{});
    CHECK_THROWS_AS(htmzv({1}, HPReal(1), tol()), NonAdmissible);
    CHECK_THROWS_AS(htmzv({2}, HPReal(-1), tol()), PoleError);
}
