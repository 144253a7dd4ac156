// acceptance criteria 1-11, one PASS/FAIL line each
#include "hzeta/compositions.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/identity_registry.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/series_engine.hpp"
#include "hzeta/specfun.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hz;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    HPReal worst = -1;  // largest residual seen by check_identity

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string sci(const HPReal& x) { return to_sci(x, 2); }

int failures = 0;

void criterion(int n, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        PrecisionScope scope(PrecisionConfig{});
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail += std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs << "s";
    if (secs > limit_s) {
        out.ok = false;
        out.detail += (out.detail.empty() ? "" : "; ") + std::string("over the time limit");
    }
    if (out.ok && out.detail.empty() && out.worst >= 0) out.detail = "max residual " + sci(out.worst);
    if (!out.ok) ++failures;
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << name << " [" << t.str() << " / limit "
              << limit_s << "s]" << (out.detail.empty() ? "" : "  " + out.detail) << std::endl;
}

// every route of the identity at the given point, residual below tol
void check_identity(Outcome& out, const std::string& id, const Params& p, const HPReal& tol,
                    const std::string& only_route = "") {
    for (const IdentityCheck& c : run_check_all(id, p, tol)) {
        if (!only_route.empty() && c.route != only_route) continue;
        const bool good = c.passed && c.residual < tol;
        std::string label = id + "/" + c.route;
        for (const auto& [k, v] : p) label += " " + k + "=" + v;
        out.require(good, label + " residual " + sci(c.residual) + (c.note.empty() ? "" : " (" + c.note + ")"));
        if (c.residual > out.worst) out.worst = c.residual;
    }
}

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    status = pclose(f);
    return out;
}

}  // namespace

int main() {
    criterion(1, "combinatorics exactness", 1, [](Outcome& o) {
        o.require(hoffman_dual({1, 1, 2, 1}) == Composition{3, 2}, "dual of (1,1,2,1)");
        o.require(hoffman_dual({1, 2, 1, 1}) == Composition{2, 3}, "dual of (1,2,1,1)");
        int admissible = 0;
        for (int w = 1; w <= 7; ++w)
            for (const auto& k : compositions_of(w)) {
                o.require(refinements(k).size() == (std::size_t(1) << (k.weight() - k.depth())), "refinement count " + k.str());
                if (!k.admissible()) continue;
                ++admissible;
                o.require(dual_index(dual_index(k)) == k, "dual_index involution at " + k.str());
            }
        o.require(admissible == 63, "expected 63 admissible indices of weight <= 7");
    });

    criterion(2, "classical anchors at 256 bits", 30, [](Outcome& o) {
        const HPReal tol("1e-12");
        const HPReal pi = 4 * atan(HPReal(1));
        const HPReal r1 = abs(hurwitz_zeta(2, HPReal(1)) - pi * pi / 6);
        const ValueWithBound a = htmzv({2, 1}, ShiftVector::constant(HPReal(1), 2), HPReal("1e-14"));
        const ValueWithBound b = htmzv({3}, ShiftVector::constant(HPReal(1), 1), HPReal("1e-14"));
        const HPReal r2 = abs(a.value - b.value);
        o.require(r1 < tol, "hurwitz_zeta(2,1) residual " + sci(r1));
        o.require(r2 < tol, "zeta(2,1) - zeta(3) residual " + sci(r2));
        o.detail += "residuals " + sci(r1) + ", " + sci(r2);
    });

    criterion(3, "log-weighted Li_{2,2} integral at alpha = 1/4", 120, [](Outcome& o) {
        const HPReal tol("1e-6");
        const HPReal s("0.75");
        const HPReal st("1e-9");
        const ValueWithBound lhs = int_mpl_weighted({2, 2}, HPReal(1), HPReal("0.25"), 0, 1, st);
        const ValueWithBound rhs =
            HPReal(-2) * htmzv({3, 2, 1}, s, st) - HPReal(2) * htmzv({2, 3, 1}, s, st) - htmzv({2, 2, 2}, s, st);
        const HPReal r = abs(lhs.value - rhs.value);
        o.require(r < tol, "residual " + sci(r));
        if (o.ok) o.detail = "residual " + sci(r);
    });

    criterion(4, "generating function at (x, alpha, k) = (0.3, 0.4, 2)", 5, [](Outcome& o) {
        check_identity(o, "thm-3.1", {{"x", "0.3"}, {"alpha", "0.4"}, {"k", "2"}}, HPReal("1e-12"));
    });

    criterion(5, "log-binomial integral at (n, k, alpha) = (3, 2, 1/3)", 10, [](Outcome& o) {
        const HPReal alpha = HPReal(1) / 3;
        WeightedIntegrand f;
        f.core = WeightedIntegrand::Core::monomial;
        f.monomial_power = 2;
        f.omx_exp = -alpha;
        f.logomx_pow = 2;
        const ValueWithBound q = de_quad(f, HPReal("1e-13"));
        const HPReal rhs = 2 * mhss(3, {1, 1}, 1 - alpha) / (3 * gen_binom(3 - alpha, HPReal(3)));
        const HPReal r = abs(q.value - rhs);
        o.require(r < HPReal("1e-10"), "residual " + sci(r));
        if (o.ok) o.detail = "residual " + sci(r);
    });

    criterion(6, "displayed example evaluations at alpha = 0.3", 300, [](Outcome& o) {
        for (const char* id : {"ex-3.4-a", "ex-3.4-b", "ex-3.4-c", "ex-3.4-d", "ex-3.7-a", "ex-3.7-b", "ex-3.7-c",
                               "ex-3.7-d", "ex-3.7-e", "ex-3.7-f", "ex-3.7-g"}) {
            const IdentityDef* d = Registry::instance().find(id);
            if (!d) {
                o.require(false, std::string(id) + " missing");
                continue;
            }
            bool found = false;
            for (const auto& p : d->samples)
                if (p.at("alpha") == "0.3") {
                    found = true;
                    check_identity(o, id, p, HPReal("1e-8"));
                }
            o.require(found, std::string(id) + " has no alpha = 0.3 sample");
        }
    });

    criterion(7, "two-binomial duality at (1/2, 1/2), m = -1..2", 120, [](Outcome& o) {
        for (int m = -1; m <= 2; ++m) {
            const std::string ms = std::to_string(m);
            check_identity(o, "thm-5.2", {{"m", ms}, {"alpha", "1/2"}, {"beta", "1/2"}}, HPReal("1e-8"));
            for (const IdentityCheck& c : run_check_all("cor-5.3", {{"m", ms}}, HPReal("1e-8"))) {
                o.require(c.passed && c.residual < HPReal("1e-8"), "cor-5.3 m=" + ms + " residual " + sci(c.residual));
                if (m % 2 != 0) o.require(c.note.find("1+(-1)^m = 0") != std::string::npos, "cor-5.3 m=" + ms + " lacks the structural cancellation");
            }
        }
    });

    criterion(8, "symmetric double zeta and T sums at (2,1,2), (3,2,3)", 300, [](Outcome& o) {
        for (const Params& p : {Params{{"p", "2"}, {"q", "1"}, {"m", "2"}}, Params{{"p", "3"}, {"q", "2"}, {"m", "3"}}}) {
            check_identity(o, "thm-6.1-zeta", p, HPReal("1e-8"), "series");
            check_identity(o, "thm-6.1-T", p, HPReal("1e-8"), "series");
        }
    });

    criterion(9, "beta-weighted values at (1/3, 1/4) and the integration by parts at k = (2)", 180, [](Outcome& o) {
        check_identity(o, "eq-7-ideas-5", {{"alpha", "1/3"}, {"beta", "1/4"}}, HPReal("1e-10"), "series");
        check_identity(o, "cor-7.3", {{"alpha", "1/3"}, {"beta", "1/4"}}, HPReal("1e-8"), "series");
        check_identity(o, "thm-7.5", {{"k", "2"}, {"alpha", "0.3"}, {"beta", "-0.4"}}, HPReal("1e-8"), "series");
    });

    criterion(10, "property suites", 300, [](Outcome& o) {
        const std::string cmd = std::string("\"") + HZETA_UNIT_TESTS_PATH +
                                "\" --no-version "
                                "-tc='stuffle and inclusion-exclusion up to n = 50,power-sum recursions*,"
                                "derivatives of the parametric binomials,beta for random exponents' 2>&1";
        int status = 0;
        const std::string text = run_capture(cmd, status);
        o.require(status == 0, "unit test subset failed:\n" + text);
        o.require(text.find("test cases:    4 |    4 passed") != std::string::npos, "expected 4 property cases:\n" + text);
        if (o.ok) o.detail = "4 property cases";
    });

    criterion(11, "verify --filter '*' --samples 1 --seed 7 is reproducible", 600, [](Outcome& o) {
        const std::string cmd = std::string("\"") + HZETA_CLI_PATH + "\" verify --filter '*' --samples 1 --seed 7 2>/dev/null";
        int s1 = 0, s2 = 0;
        const std::string a = run_capture(cmd, s1);
        const std::string b = run_capture(cmd, s2);
        o.require(!a.empty(), "empty report");
        o.require(a == b, "reports differ");
        o.require(WIFEXITED(s1) && WEXITSTATUS(s1) != 3, "configuration error");
        if (o.ok) o.detail = std::to_string(a.size()) + " bytes, identical";
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
