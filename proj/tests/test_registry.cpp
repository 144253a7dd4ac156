#include "hzeta/errors.hpp"
#include "hzeta/identity_registry.hpp"
#include "hzeta/specfun.hpp"

#include <doctest.h>

#include <set>

using namespace hz;

namespace {

const std::vector<std::string>& required_ids() {
    static const std::vector<std::string> ids{
        "thm-2.1a",     "thm-2.1b",     "thm-2.2",      "cor-2.3-xi",  "cor-2.3-psi",  "eq-eta",      "thm-3.1",
        "thm-3.2",      "thm-3.4",      "thm-3.5",      "thm-3.6a",    "thm-3.6b",     "eq-harmonic-N", "thm-4.2",
        "thm-4.3",      "thm-4.4",      "eq-4.4-limit", "thm-5.2",     "cor-5.3",      "thm-5.4",     "cor-5.5",
        "cor-5.6",      "thm-5.7",      "thm-5.8",      "cor-5.9",     "cor-5.10",     "cor-5.11",    "thm-6.1-zeta",
        "thm-6.1-T",    "cor-6.2",      "eq-7-ideas-4", "eq-7-ideas-5", "eq-7-ideas-6", "eq-7-depth1", "thm-7.2",
        "cor-7.3",      "cor-7.4",      "thm-7.5",      "conj-3.7",    "ex-3.4-a",     "ex-3.4-b",    "ex-3.4-c",
        "ex-3.4-d",     "ex-3.7-a",     "ex-3.7-b",     "ex-3.7-c",    "ex-3.7-d",     "ex-3.7-e",    "ex-3.7-f",
        "ex-3.7-g"};
    return ids;
}

}  // namespace

TEST_CASE("registry coverage") {
    for (const auto& id : required_ids()) CHECK_MESSAGE(Registry::instance().find(id) != nullptr, id);
    std::set<std::string> seen;
    for (const auto& d : Registry::instance().all()) {
        CHECK(seen.insert(d.id).second);
        CHECK(!d.samples.empty());
        CHECK(!d.anchor.empty());
    }
    const IdentityDef* conj = Registry::instance().find("conj-3.7");
    REQUIRE(conj);
    CHECK(conj->exploratory);
}

TEST_CASE("declared samples stay inside each domain") {
    PrecisionScope scope(PrecisionConfig{});
    for (const auto& d : Registry::instance().all())
        for (const auto& p : d.samples) {
            std::vector<Route> routes;
            CHECK_NOTHROW(routes = d.plan(p));
            CHECK(!routes.empty());
        }
}

TEST_CASE("dual-route identities carry a tight and a loose route") {
    PrecisionScope scope(PrecisionConfig{});
    for (const char* id : {"thm-2.1a", "thm-3.2", "eq-7-ideas-4"}) {
        const IdentityDef* d = Registry::instance().find(id);
        REQUIRE(d);
        const auto routes = d->plan(d->samples.front());
        bool tight = false, loose = false;
        for (const auto& r : routes) (r.loose ? loose : tight) = true;
        CHECK_MESSAGE(tight, id);
        CHECK_MESSAGE(loose, id);
    }
}

TEST_CASE("route tolerances") {
    PrecisionScope scope(PrecisionConfig{});
    Route tight{"series", false, {}}, loose{"quadrature", true, {}};
    CHECK(route_tol(tight, HPReal("1e-10")) == HPReal("1e-10"));
    CHECK(route_tol(loose, HPReal("1e-10")) == HPReal("1e-6"));
    CHECK(route_tol(loose, HPReal("1e-4")) == HPReal("1e-4"));
}

TEST_CASE("run_check examples") {
    PrecisionScope scope(PrecisionConfig{});
    const IdentityCheck a = run_check("thm-3.4", {{"k", "2"}, {"kk", "1"}, {"alpha", "1/4"}}, HPReal("1e-8"));
    CHECK(a.passed);
    CHECK(a.residual < HPReal("1e-8"));
    CHECK(a.passed == (a.residual <= a.tol + a.lhs.abs_error + a.rhs.abs_error));
    CHECK(run_check("thm-6.1-zeta", {{"p", "2"}, {"q", "1"}, {"m", "2"}}, HPReal("1e-8")).passed);
    const IdentityCheck c = run_check("eq-7-ideas-5", {{"alpha", "1/3"}, {"beta", "1/4"}}, HPReal("1e-10"));
    CHECK(c.passed);
    CHECK(abs(c.rhs.value - beta(HPReal(2) / 3, HPReal(3) / 4)) < HPReal("1e-40"));
    for (const auto& chk : run_check_all("eq-7-ideas-5", {{"alpha", "1/3"}, {"beta", "1/4"}}, HPReal("1e-10")))
        CHECK_MESSAGE(chk.passed, chk.route);
}

TEST_CASE("errors") {
    PrecisionScope scope(PrecisionConfig{});
    CHECK_THROWS_AS(run_check("no-such-id", {}, HPReal("1e-8")), UnknownIdentity);
    const IdentityDef* d = Registry::instance().find("eq-7-ideas-5");
    REQUIRE(d);
    try {
        d->plan({{"alpha", "1"}, {"beta", "1/4"}});
        FAIL("expected a DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("alpha") != std::string::npos);
    }
    const IdentityDef* t75 = Registry::instance().find("thm-7.5");
    REQUIRE(t75);
    CHECK_THROWS_AS(t75->plan({{"k", "2"}, {"alpha", "0.3"}, {"beta", "0.4"}}), DomainError);
}

TEST_CASE("filters") {
    CHECK(id_matches("thm-2.*", "thm-2.1a"));
    CHECK(!id_matches("thm-2.*", "cor-2.3-xi"));
    CHECK(matching_ids("nope-*").empty());
    CHECK(matching_ids("*").size() == Registry::instance().all().size());
}

TEST_CASE("suite runs are deterministic and ordered") {
    SuiteConfig cfg;
    cfg.filter = "thm-2.*";
    cfg.samples_per_id = 2;
    cfg.seed = 5;
    const SuiteReport a = run_suite(cfg);
    const SuiteReport b = run_suite(cfg);
    CHECK(report_records(a, false) == report_records(b, false));
    CHECK(report_table(a, false) == report_table(b, false));
    CHECK(a.checks.size() >= 6);
    CHECK(a.summary.failed == 0);
    for (std::size_t i = 1; i < a.checks.size(); ++i) {
        const auto& p = a.checks[i - 1];
        const auto& q = a.checks[i];
        CHECK((p.id < q.id || (p.id == q.id && p.sample_index <= q.sample_index)));
    }
    cfg.seed = 6;
    const SuiteReport c = run_suite(cfg);
    CHECK(c.summary.failed == 0);
}

TEST_CASE("odd m cancellation in the duality family") {
    SuiteConfig cfg;
    cfg.filter = "cor-5.3";
    cfg.samples_per_id = 100;
    const SuiteReport r = run_suite(cfg);
    CHECK(r.summary.failed == 0);
    bool odd_seen = false;
    for (const auto& c : r.checks)
        if (std::stoi(c.params.at("m")) % 2 != 0) {
            odd_seen = true;
            CHECK(!c.note.empty());
        }
    CHECK(odd_seen);
}
