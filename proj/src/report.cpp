#include "hzeta/identity_registry.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hz {

namespace {

int value_digits(const SuiteConfig& cfg) { return std::max(6, static_cast<int>(cfg.precision.bits * 0.30103) - 2); }

std::string param_text(const std::string& v) {
    // rationals are reported as decimals
    if (v.find('/') == std::string::npos) return v;
    PrecisionScope scope(256);
    return to_decimal(parse_real(v), 30);
}

std::string params_inline(const Params& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ' ';
        s += k + '=' + v;
    }
    return s;
}

}  // namespace

std::string report_records(const SuiteReport& report, bool timing) {
    using nlohmann::ordered_json;
    const int digits = value_digits(report.config);
    ordered_json doc;
    doc["config"] = {{"precision_bits", report.config.precision.bits},
                     {"guard_bits", report.config.precision.guard_bits},
                     {"tol", to_sci(report.config.tol, 2)},
                     {"n_max", report.config.strategy.n_max},
                     {"filter", report.config.filter},
                     {"samples_per_id", report.config.samples_per_id},
                     {"seed", report.config.seed}};
    doc["summary"] = {{"total", report.summary.total},
                      {"passed", report.summary.passed},
                      {"failed", report.summary.failed},
                      {"exploratory", report.summary.exploratory}};
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : c.params) params[k] = param_text(v);
        ordered_json rec;
        rec["id"] = c.id;
        rec["sample"] = c.sample_index;
        rec["route"] = c.route;
        rec["params"] = params;
        rec["lhs"] = to_decimal(c.lhs.value, digits);
        rec["lhs_error"] = to_sci(c.lhs.abs_error, 2);
        rec["rhs"] = to_decimal(c.rhs.value, digits);
        rec["rhs_error"] = to_sci(c.rhs.abs_error, 2);
        rec["residual"] = to_sci(c.residual, 2);
        rec["tol"] = to_sci(c.tol, 2);
        rec["passed"] = c.passed;
        rec["exploratory"] = c.exploratory;
        rec["elapsed_ms"] = timing ? ordered_json(c.elapsed_ms) : ordered_json(nullptr);
        rec["rigorous_flags"] = {{"lhs", c.lhs.rigorous}, {"rhs", c.rhs.rigorous}};
        rec["note"] = c.note;
        checks.push_back(std::move(rec));
    }
    doc["checks"] = std::move(checks);
    return doc.dump(2) + "\n";
}

std::string report_table(const SuiteReport& report, bool timing) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"id", "#", "route", "params", "residual", "tol", "status"});
    if (timing) rows.front().push_back("ms");
    for (const auto& c : report.checks) {
        std::string status = c.exploratory ? "EXPLORE" : (c.passed ? "PASS" : "FAIL");
        std::vector<std::string> row{c.id, std::to_string(c.sample_index), c.route, params_inline(c.params),
                                     to_sci(c.residual, 2), to_sci(c.tol, 2), status};
        if (timing) {
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(1) << c.elapsed_ms;
            row.push_back(ms.str());
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        os << line << '\n';
    }
    os << report.summary.total << " checks: " << report.summary.passed << " passed, " << report.summary.failed
       << " failed, " << report.summary.exploratory << " exploratory\n";
    for (const auto& c : report.checks)
        if (!c.passed && !c.note.empty()) os << "  " << c.id << " #" << c.sample_index << " " << c.route << ": " << c.note << '\n';
    return os.str();
}

}  // namespace hz
