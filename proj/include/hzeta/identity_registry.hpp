#pragma once

#include "hzeta/extrapolation.hpp"
#include "hzeta/hpreal.hpp"
#include "hzeta/value.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hz {

// name -> text ("1/4", "0.3", "2,1", "3")
using Params = std::map<std::string, std::string>;

struct IdentityCheck {
    std::string id;
    int sample_index = 0;
    std::string route;  // "series", "quadrature", "limit", ...
    Params params;
    ValueWithBound lhs;
    ValueWithBound rhs;
    HPReal residual;
    HPReal tol;
    bool passed = false;
    bool exploratory = false;
    double elapsed_ms = 0;
    std::string note;  // structural remarks or the error that stopped the check
};

struct SuiteConfig {
    PrecisionConfig precision;
    TailStrategy strategy;
    std::string filter = "*";
    int samples_per_id = 2;
    HPReal tol = HPReal("1e-10");
    unsigned long seed = 0;
};

struct SuiteSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int exploratory = 0;
};

struct SuiteReport {
    std::vector<IdentityCheck> checks;
    SuiteConfig config;
    SuiteSummary summary;
};

// One way of checking an identity: both sides evaluated to side_tol.
struct RouteSides {
    ValueWithBound lhs;
    ValueWithBound rhs;
    std::string note;
};

struct Route {
    std::string name;
    bool loose = false;  // quadrature routes are held to max(tol, 1e-6)
    std::function<RouteSides(const HPReal& side_tol)> eval;
};

struct IdentityDef {
    std::string id;
    std::string anchor;  // short description of the relation
    bool exploratory = false;
    std::vector<Params> samples;
    // validates the sample (DomainError names the parameter) and lists the routes
    std::function<std::vector<Route>(const Params&)> plan;
};

class Registry {
public:
    static const Registry& instance();
    void add(IdentityDef def);
    const IdentityDef* find(const std::string& id) const;
    const std::vector<IdentityDef>& all() const { return defs_; }

private:
    std::vector<IdentityDef> defs_;
};

// shell-style glob ("thm-2.*")
bool id_matches(const std::string& filter, const std::string& id);
std::vector<std::string> matching_ids(const std::string& filter);

// tolerance actually applied to a route
HPReal route_tol(const Route& r, const HPReal& tol);

// first route only (the series route when there are several)
IdentityCheck run_check(const std::string& id, const Params& params, const HPReal& tol);
// every route of the identity
std::vector<IdentityCheck> run_check_all(const std::string& id, const Params& params, const HPReal& tol);

SuiteReport run_suite(const SuiteConfig& config);

// report serialisation; timing adds elapsed_ms (null otherwise)
std::string report_records(const SuiteReport& report, bool timing);
std::string report_table(const SuiteReport& report, bool timing);

}  // namespace hz
