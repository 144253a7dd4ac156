// hzeta: evaluate quantities, run the identity suite, transform indices
#include "hzeta/compositions.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/identity_registry.hpp"
#include "hzeta/series_engine.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace hz;

namespace {

struct CliConfig {
    int precision_bits = PrecisionConfig::from_env().bits;
    std::string tol = "1e-10";
    long n_max = default_tail_n_max();
    std::string format = "table";
    unsigned long seed = 0;
};

struct EvalArgs {
    std::string kind;
    std::string index;
    std::string shift = "1";
    std::string x;
    std::string alpha;
    std::string beta;
    std::string shift_arg;
    std::string star_index;
    std::string a, b;
    int kk = 0, m = 0, s = 1, l = 0, kh = 0;
    std::optional<int> k;
};

int digits_for(int bits) { return std::max(6, static_cast<int>(bits * 0.30103) - 2); }

[[noreturn]] void usage(const std::string& what) { throw DomainError(what); }

Composition need_index(const EvalArgs& a, const char* name = "--index") {
    const std::string& t = std::string(name) == "--index" ? a.index : a.star_index;
    if (t.empty()) usage(std::string(name) + " is required");
    return Composition::parse(t);
}

HPReal need_real(const std::string& v, const char* name) {
    if (v.empty()) usage(std::string(name) + " is required");
    return parse_real(v);
}

ShiftVector parse_shifts(const std::string& text, int depth) {
    std::vector<HPReal> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_real(item));
    if (v.size() == 1) return ShiftVector::constant(v[0], depth);
    if (static_cast<int>(v.size()) != depth)
        throw DimensionMismatch("--shift: expected 1 or " + std::to_string(depth) + " values");
    return ShiftVector(std::move(v));
}

ValueWithBound evaluate(const EvalArgs& a, const HPReal& tol) {
    const std::string& kind = a.kind;
    if (kind == "htmzv" || kind == "htmzsv") {
        const Composition k = need_index(a);
        const ShiftVector sh = parse_shifts(a.shift, k.depth());
        return kind == "htmzv" ? htmzv(k, sh, tol) : htmzsv(k, sh, tol);
    }
    if (kind == "htmtv") return htmtv(need_index(a), a.alpha.empty() ? HPReal(1) : parse_real(a.alpha), tol);
    if (kind == "mpl") return mpl(need_index(a), need_real(a.x, "--x"), tol);
    if (kind == "kta") return kta(need_index(a), need_real(a.x, "--x"), tol);
    if (kind == "apery1") return apery_I(need_index(a), a.kk, need_real(a.alpha, "--alpha"), tol);
    if (kind == "apery2") {
        const Composition tail = a.star_index.empty() ? Composition{} : Composition::parse(a.star_index);
        return apery_II(a.kh, tail, a.m, need_real(a.alpha, "--alpha"), tol);
    }
    if (kind == "apery3")
        return apery_III(need_index(a), need_index(a, "--star-index"), a.m, need_real(a.alpha, "--alpha"),
                         need_real(a.beta, "--beta"), tol);
    if (kind == "xi") return arakawa_kaneko(AKKind::xi, a.s, need_index(a), tol);
    if (kind == "psi") return arakawa_kaneko(AKKind::psi, a.s, need_index(a), tol);
    if (kind == "eta") return arakawa_kaneko(AKKind::eta, a.s, need_index(a), tol);
    if (kind == "pbc") {
        const HPReal alpha = need_real(a.alpha, "--alpha");
        const HPReal b = need_real(a.shift_arg, "--shift-arg");
        if (a.l > 0) return htmzv_pbc_dalpha(alpha, a.l, need_index(a), b, tol);
        return htmzv_pbc(alpha, need_index(a), b, tol);
    }
    if (kind == "euler-sum") {
        if (a.k) return param_euler_pow(a.m, *a.k, need_real(a.alpha, "--alpha"), tol);
        return param_euler_sum(a.m, need_real(a.a, "--a"), need_real(a.b, "--b"), tol);
    }
    usage("unknown kind '" + kind +
          "' (htmzv, htmzsv, htmtv, mpl, kta, apery1, apery2, apery3, xi, psi, eta, pbc, euler-sum)");
}

std::string join(const std::vector<Composition>& v) {
    std::string out;
    for (const auto& c : v) {
        if (!out.empty()) out += " | ";
        out += c.str();
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hzeta: Hurwitz-type multiple zeta values and identity checks"};
    app.require_subcommand(1);
    CliConfig cfg;
    app.add_option("--precision", cfg.precision_bits, "working precision in bits (HZETA_PREC sets the default)")
        ->check(CLI::Range(32, 1 << 16));
    app.add_option("--tol", cfg.tol, "target tolerance");
    app.add_option("--n-max", cfg.n_max, "term limit for series")->check(CLI::PositiveNumber);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate a quantity");
    eval->add_option("kind", ea.kind, "htmzv|htmzsv|htmtv|mpl|kta|apery1|apery2|apery3|xi|psi|eta|pbc|euler-sum")
        ->required();
    eval->add_option("--index", ea.index, "index, e.g. 2,1");
    eval->add_option("--shift", ea.shift, "shift a (one value or one per slot)");
    eval->add_option("--x", ea.x, "argument in [0,1]");
    eval->add_option("--alpha", ea.alpha, "alpha");
    eval->add_option("--beta", ea.beta, "beta");
    eval->add_option("--shift-arg", ea.shift_arg, "second argument of zeta^(alpha)(k; .)");
    eval->add_option("--star-index", ea.star_index, "star index (apery2 tail, apery3 l)");
    eval->add_option("--kk", ea.kk, "number of ones in the star sum (apery1)");
    eval->add_option("--kh", ea.kh, "number of ones in the plain sum (apery2)");
    eval->add_option("--m", ea.m, "power of n (apery2, apery3) or depth of ones (euler-sum)");
    eval->add_option("--k", ea.k, "euler-sum: exponent k in (n+alpha)^{k+1}");
    eval->add_option("--a", ea.a, "euler-sum shift a");
    eval->add_option("--b", ea.b, "euler-sum shift b");
    eval->add_option("--s", ea.s, "xi/psi/eta argument");
    eval->add_option("--l", ea.l, "pbc: derivative order in alpha");

    std::string filter = "*", out_path;
    int samples = 2;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("--filter", filter, "glob over identity ids");
    verify->add_option("--samples", samples, "samples per identity")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", cfg.seed, "sampling seed");
    verify->add_option("--out", out_path, "write the report here");
    verify->add_option("--format", cfg.format, "table or records")->check(CLI::IsMember({"table", "records"}));
    verify->add_flag("--timing", timing, "include elapsed times");

    std::string op, index_text;
    auto* index = app.add_subcommand("index", "index transformations");
    index->add_option("op", op, "dual|hoffman-dual|refinements")->required()->check(
        CLI::IsMember({"dual", "hoffman-dual", "refinements"}));
    index->add_option("index", index_text, "index, e.g. 1,1,2,1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    PrecisionConfig prec = PrecisionConfig::from_env();
    prec.bits = cfg.precision_bits;

    try {
        if (*index) {
            const Composition k = Composition::parse(index_text);
            if (op == "dual") std::cout << dual_index(k).str() << '\n';
            else if (op == "hoffman-dual") std::cout << hoffman_dual(k).str() << '\n';
            else {
                auto r = refinements(k);
                std::sort(r.begin(), r.end(), std::greater<>());
                std::cout << join(r) << '\n';
            }
            return 0;
        }

        if (*eval) {
            PrecisionScope scope(prec);
            set_default_tail_n_max(cfg.n_max);
            const HPReal tol = parse_real(cfg.tol);
            const auto start = std::chrono::steady_clock::now();
            const ValueWithBound v = evaluate(ea, tol);
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            std::cout << "value      " << to_decimal(v.value, digits_for(prec.bits)) << '\n'
                      << "error      " << to_sci(v.abs_error, 2) << '\n'
                      << "rigorous   " << (v.rigorous ? "true" : "false") << '\n'
                      << "elapsed_ms " << static_cast<long>(ms) << '\n';
            return 0;
        }

        if (matching_ids(filter).empty()) {
            std::cerr << "no identities matched '" << filter << "'\n";
            return 3;
        }
        SuiteConfig sc;
        sc.precision = prec;
        sc.strategy.n_max = cfg.n_max;
        sc.filter = filter;
        sc.samples_per_id = samples;
        {
            PrecisionScope scope(prec);
            sc.tol = parse_real(cfg.tol);
        }
        sc.seed = cfg.seed;
        const SuiteReport report = run_suite(sc);
        const std::string text = cfg.format == "records" ? report_records(report, timing) : report_table(report, timing);
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "cannot write " << out_path << '\n';
                return 3;
            }
            f << text;
        } else {
            std::cout << text;
        }
        std::cerr << report.summary.passed << " passed, " << report.summary.failed << " failed, "
                  << report.summary.exploratory << " exploratory\n";
        return report.summary.failed == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
