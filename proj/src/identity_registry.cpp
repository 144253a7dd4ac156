#include "hzeta/identity_registry.hpp"

#include "hzeta/errors.hpp"
#include "identities_common.hpp"

#include <algorithm>
#include <chrono>
#include <fnmatch.h>
#include <numeric>
#include <random>

namespace hz {

const Registry& Registry::instance() {
    static const Registry reg = [] {
        Registry r;
        ids::register_sec2(r);
        ids::register_sec3(r);
        ids::register_sec4(r);
        ids::register_sec5(r);
        ids::register_sec6_7(r);
        std::sort(r.defs_.begin(), r.defs_.end(),
                  [](const IdentityDef& a, const IdentityDef& b) { return a.id < b.id; });
        return r;
    }();
    return reg;
}

void Registry::add(IdentityDef def) {
    if (find(def.id)) throw Error("duplicate identity id " + def.id);
    defs_.push_back(std::move(def));
}

const IdentityDef* Registry::find(const std::string& id) const {
    for (const auto& d : defs_)
        if (d.id == id) return &d;
    return nullptr;
}

bool id_matches(const std::string& filter, const std::string& id) {
    return fnmatch(filter.c_str(), id.c_str(), 0) == 0;
}

std::vector<std::string> matching_ids(const std::string& filter) {
    std::vector<std::string> out;
    for (const auto& d : Registry::instance().all())
        if (id_matches(filter, d.id)) out.push_back(d.id);
    return out;
}

HPReal route_tol(const Route& r, const HPReal& tol) {
    if (!r.loose) return tol;
    const HPReal floor_tol("1e-6");
    return tol < floor_tol ? floor_tol : tol;
}

namespace {

const IdentityDef& lookup(const std::string& id) {
    const IdentityDef* def = Registry::instance().find(id);
    if (!def) throw UnknownIdentity("unknown identity '" + id + "'");
    return *def;
}

IdentityCheck run_route(const IdentityDef& def, int sample, const Params& params, const Route& route,
                        const HPReal& tol) {
    IdentityCheck c;
    c.id = def.id;
    c.sample_index = sample;
    c.route = route.name;
    c.params = params;
    c.exploratory = def.exploratory;
    c.tol = route_tol(route, tol);
    c.lhs = c.rhs = ValueWithBound::exact(HPReal(0));
    c.residual = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
        RouteSides s = route.eval(c.tol / 1000);
        c.lhs = s.lhs;
        c.rhs = s.rhs;
        c.note = s.note;
        c.residual = abs(c.lhs.value - c.rhs.value);
        c.passed = c.residual <= c.tol + c.lhs.abs_error + c.rhs.abs_error;
    } catch (const Error& e) {
        c.passed = false;
        c.note = e.what();
    }
    if (def.exploratory) {
        c.passed = true;
        c.note = c.note.empty() ? "exploratory: nothing asserted" : "exploratory: " + c.note;
    }
    c.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
}

std::vector<IdentityCheck> run_sample(const IdentityDef& def, int sample, const Params& params, const HPReal& tol) {
    std::vector<IdentityCheck> out;
    for (const Route& r : def.plan(params)) out.push_back(run_route(def, sample, params, r, tol));
    return out;
}

int sample_index_of(const IdentityDef& def, const Params& params) {
    for (std::size_t i = 0; i < def.samples.size(); ++i)
        if (def.samples[i] == params) return static_cast<int>(i);
    return -1;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

IdentityCheck run_check(const std::string& id, const Params& params, const HPReal& tol) {
    const IdentityDef& def = lookup(id);
    const auto routes = def.plan(params);
    if (routes.empty()) throw Error("identity " + id + " has no routes");
    return run_route(def, sample_index_of(def, params), params, routes.front(), tol);
}

std::vector<IdentityCheck> run_check_all(const std::string& id, const Params& params, const HPReal& tol) {
    const IdentityDef& def = lookup(id);
    return run_sample(def, sample_index_of(def, params), params, tol);
}

SuiteReport run_suite(const SuiteConfig& config) {
    PrecisionScope scope(config.precision);
    const long saved_n_max = default_tail_n_max();
    set_default_tail_n_max(config.strategy.n_max);
    SuiteReport report;
    report.config = config;
    const HPReal tol(config.tol);
    for (const auto& def : Registry::instance().all()) {
        if (!id_matches(config.filter, def.id)) continue;
        const int n = static_cast<int>(def.samples.size());
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::mt19937_64 rng(config.seed ^ fnv1a(def.id));
        // Fisher-Yates with an explicit modulus keeps the draw identical across standard libraries
        for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
        order.resize(std::min(n, std::max(config.samples_per_id, 0)));
        std::sort(order.begin(), order.end());
        for (int s : order) {
            std::vector<IdentityCheck> checks;
            try {
                checks = run_sample(def, s, def.samples[s], tol);
            } catch (const Error& e) {
                IdentityCheck c;
                c.id = def.id;
                c.sample_index = s;
                c.route = "plan";
                c.params = def.samples[s];
                c.lhs = c.rhs = ValueWithBound::exact(HPReal(0));
                c.residual = 0;
                c.tol = tol;
                c.note = e.what();
                checks.push_back(c);
            }
            for (auto& c : checks) report.checks.push_back(std::move(c));
        }
    }
    set_default_tail_n_max(saved_n_max);
    for (const auto& c : report.checks) {
        ++report.summary.total;
        if (c.exploratory) ++report.summary.exploratory;
        else if (c.passed) ++report.summary.passed;
        else ++report.summary.failed;
    }
    return report;
}

}  // namespace hz
