#include "hzeta/quadrature.hpp"
#include "hzeta/series_engine.hpp"
#include "hzeta/specfun.hpp"

#include <doctest.h>

#include <random>

using namespace hz;

namespace {

HPReal pi_oracle() { return 4 * atan(HPReal(1)); }

bool close(const ValueWithBound& v, const HPReal& expected, const HPReal& t) {
    return abs(v.value - expected) <= t;
}

WeightedIntegrand power(const HPReal& a, const HPReal& b) {
    WeightedIntegrand f;
    f.x_exp = a;
    f.omx_exp = b;
    return f;
}

}  // namespace

TEST_CASE("elementary integrals") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-12");
    CHECK(close(de_quad(power(HPReal("-0.5"), HPReal("-0.5")), t), pi_oracle(), t));
    WeightedIntegrand lg;
    lg.logx_pow = 1;
    CHECK(close(de_quad(lg, t), HPReal(-1), t));
    CHECK(close(de_quad(power(HPReal("-0.3"), HPReal("0.3")), t), beta(HPReal("0.7"), HPReal("1.3")), t));
    CHECK(close(int_mpl_weighted({1}, HPReal(0), HPReal(0), 0, 0, t), HPReal(1), t));
}

TEST_CASE("beta for random exponents") {
    PrecisionScope scope(PrecisionConfig{});
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> d(0, 100000);
    const HPReal t("1e-10");
    for (int i = 0; i < 20; ++i) {
        const HPReal a = HPReal("0.2") + HPReal("2.8") * HPReal(d(rng)) / 100000;
        const HPReal b = HPReal("0.2") + HPReal("2.8") * HPReal(d(rng)) / 100000;
        CHECK(close(de_quad(power(a - 1, b - 1), t / 10), beta(a, b), t));
    }
}

TEST_CASE("level estimates converge geometrically") {
    PrecisionScope scope(PrecisionConfig{});
    std::vector<WeightedIntegrand> fs{power(HPReal("-0.5"), HPReal("-0.5")), power(HPReal("0.4"), HPReal("-0.7"))};
    WeightedIntegrand li;
    li.core = WeightedIntegrand::Core::mpl;
    li.index = Composition{2};
    li.x_exp = -1;
    li.omx_exp = HPReal("-0.25");
    li.logomx_pow = 1;
    fs.push_back(li);
    WeightedIntegrand a;
    a.core = WeightedIntegrand::Core::kta;
    a.index = Composition{1};
    a.x_exp = -1;
    a.kta_frame = true;
    fs.push_back(a);
    for (const auto& f : fs) {
        std::vector<HPReal> est;
        QuadOptions opt;
        opt.level_estimates = &est;
        const ValueWithBound v = de_quad(f, HPReal("1e-30"), opt);
        REQUIRE(est.size() >= 4);
        // deltas against the final value, ignoring the floor set by the tolerance
        std::vector<double> logs;
        for (std::size_t i = 0; i + 1 < est.size(); ++i) {
            const HPReal d = abs(est[i] - v.value);
            if (d < HPReal("1e-28")) break;
            logs.push_back(static_cast<double>(log10(d)));
        }
        for (std::size_t i = 2; i < logs.size(); ++i) CHECK(logs[i] - logs[i - 1] <= logs[i - 1] - logs[i - 2] + 0.5);
        for (std::size_t i = 1; i < logs.size(); ++i) CHECK(logs[i] < logs[i - 1]);
    }
}

TEST_CASE("Li_{2,2} log integral") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-6");
    const HPReal s("0.75");
    const ValueWithBound rhs = HPReal(-2) * htmzv({3, 2, 1}, s, t / 10) - HPReal(2) * htmzv({2, 3, 1}, s, t / 10) -
                               htmzv({2, 2, 2}, s, t / 10);
    CHECK(close(int_mpl_weighted({2, 2}, HPReal(1), HPReal("0.25"), 0, 1, t / 10), rhs.value, t));
}

TEST_CASE("monomial against finite sums") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-10");
    const HPReal alpha = HPReal(1) / 3;
    WeightedIntegrand f;
    f.core = WeightedIntegrand::Core::monomial;
    f.monomial_power = 2;
    f.omx_exp = -alpha;
    f.logomx_pow = 2;
    const HPReal rhs = 2 * mhss(3, {1, 1}, 1 - alpha) / (3 * gen_binom(3 - alpha, HPReal(3)));
    CHECK(close(de_quad(f, t / 10), rhs, t));
}

TEST_CASE("A-function integrals") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-8");
    CHECK(close(int_kta_weighted({1}, HPReal(0), 0, t / 10), pi_oracle() * pi_oracle() / 4, t));
    CHECK(close(int_kta_weighted({2}, HPReal(0), 0, t / 10), arakawa_kaneko(AKKind::psi, 1, {2}, t / 10).value, t));
    const ValueWithBound rhs = HPReal(-2) * htmtv({3, 1}, HPReal(1), t / 10) - htmtv({2, 2}, HPReal(1), t / 10);
    CHECK(close(int_kta_weighted({2}, HPReal(0), 1, t / 10), rhs.value, t));
}

TEST_CASE("Landen integrand") {
    PrecisionScope scope(PrecisionConfig{});
    const HPReal t("1e-6");
    const HPReal alpha = HPReal(1) / 3;
    for (const Composition& k : {Composition{1}, Composition{2}, Composition{1, 1}, Composition{2, 1}, Composition{1, 2}}) {
        WeightedIntegrand f;
        f.core = WeightedIntegrand::Core::mpl_landen;
        f.index = k;
        f.x_exp = -1;
        f.omx_exp = -alpha;
        const HPReal sgn = k.depth() % 2 ? -1 : 1;
        const ValueWithBound rhs = htmzsv(rev_dual_plus(k), 1 - alpha, t / 10);
        CHECK(close(de_quad(f, t / 10), sgn * rhs.value, t));
    }
}
