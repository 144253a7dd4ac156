#include "identities_common.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <sstream>

namespace hz::ids {

namespace {

const std::string& raw(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw DomainError("missing parameter '" + name + "'");
    return it->second;
}

}  // namespace

HPReal real_param(const Params& p, const std::string& name) {
    try {
        return parse_real(raw(p, name));
    } catch (const DomainError& e) {
        throw DomainError("parameter '" + name + "': " + e.what());
    }
}

int int_param(const Params& p, const std::string& name) {
    const std::string& s = raw(p, name);
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("parameter '" + name + "': not an integer: " + s);
    }
}

Composition index_param(const Params& p, const std::string& name) {
    const std::string& s = raw(p, name);
    if (s.empty()) return Composition();
    try {
        return Composition::parse(s);
    } catch (const std::exception& e) {
        throw DomainError("parameter '" + name + "': " + e.what());
    }
}

void require(bool ok, const std::string& name, const std::string& what) {
    if (!ok) throw DomainError("parameter '" + name + "' " + what);
}

bool is_integer(const HPReal& x) { return floor(x) == x; }

void require_nonint(const Params& p, const std::string& name) {
    require(!is_integer(real_param(p, name)), name, "must not be an integer");
}

HPReal big(const BigInt& b) { return HPReal(b.str()); }

HPReal sign(int e) { return (e % 2 == 0) ? HPReal(1) : HPReal(-1); }

ValueWithBound rounded(const HPReal& v) { return {v, abs(v) * epsilon() * 64, true}; }

ValueWithBound binom_weighted_sum(Family f, const Composition& kappa, int kk, const HPReal& shift,
                                  const HPReal& tol) {
    const auto js = weak_compositions(kk, kappa.depth());
    Combination c;
    for (const auto& j : js) {
        const HPReal b = big(binom_weight(kappa, j));
        const Composition idx = add_weak(kappa, j);
        const HPReal t = tol / (b * static_cast<long>(js.size()));
        switch (f) {
            case Family::zeta: c.add(b, htmzv(idx, shift, t)); break;
            case Family::zeta_star: c.add(b, htmzsv(idx, shift, t)); break;
            case Family::T: c.add(b, htmtv(idx, shift, t)); break;
        }
    }
    return c.total;
}

ValueWithBound ky_sum(const Composition& a, const Composition& b, int w, const HPReal& tol) {
    if (w < 2) throw DomainError("ky_sum: need w >= 2");
    auto za = std::make_shared<NestedSum>(NestedSum::powers(a, ShiftVector::constant(HPReal(1), a.depth()), false));
    auto zb = std::make_shared<NestedSum>(NestedSum::powers(b, ShiftVector::constant(HPReal(1), b.depth()), true));
    TermFn term = [=](long n) -> HPReal {
        const HPReal lower = za->value();
        za->advance();
        zb->advance();
        return lower * zb->value() * pow_int(HPReal(n), -w);
    };
    return sum_extrapolated(term, SeriesShape{{HPReal(1 - w)}, a.depth() + b.depth()}, tol);
}

ValueWithBound shifted_pair_sum(const Composition& idx, const HPReal& alpha, const HPReal& beta,
                                const HPReal& tol) {
    auto z = std::make_shared<NestedSum>(NestedSum::powers(idx, ShiftVector::constant(1 - beta, idx.depth()), false));
    TermFn term = [=](long n) -> HPReal {
        const HPReal lower = z->value();
        z->advance();
        if (lower == 0) return HPReal(0);
        return lower / ((HPReal(n) - beta) * (HPReal(n) - alpha - beta));
    };
    return sum_extrapolated(term, SeriesShape{{HPReal(-1)}, idx.depth()}, tol);
}

namespace {

void partitions(int p, int part, std::vector<int>& c, const std::function<void(const std::vector<int>&)>& fn) {
    // c[i] = multiplicity of part size i (1-based), filled from the largest size down
    if (part == 0) {
        if (p == 0) fn(c);
        return;
    }
    for (int mult = p / part; mult >= 0; --mult) {
        c[part] = mult;
        partitions(p - mult * part, part - 1, c, fn);
    }
    c[part] = 0;
}

}  // namespace

ValueWithBound cycle_sum(int m, int p, int k, const HPReal& alpha) {
    std::map<int, HPReal> hz_cache;
    auto hurwitz = [&](int s) -> const HPReal& {
        auto it = hz_cache.find(s);
        if (it == hz_cache.end()) it = hz_cache.emplace(s, hurwitz_zeta(s, 1 - alpha)).first;
        return it->second;
    };
    HPReal total = 0;
    std::vector<int> c(p + 1, 0);
    partitions(p, p, c, [&](const std::vector<int>& cs) {
        HPReal coef = 1;
        std::vector<int> blocks;
        for (int j = 1; j <= p; ++j) {
            if (cs[j] == 0) continue;
            coef *= sign((j - 1) * cs[j]) / (factorial(cs[j]) * pow_int(HPReal(j), cs[j]));
            for (int t = 0; t < cs[j]; ++t) blocks.push_back(j);
        }
        HPReal inner = 0;
        for_each_weak_composition(k, static_cast<int>(blocks.size()), [&](const WeakComposition& kw) {
            HPReal prod = 1;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                const int im = blocks[b] * m;
                prod *= big(binomial(im - 1 + kw[b], kw[b])) * hurwitz(im + kw[b]);
            }
            inner += prod;
        });
        total += coef * inner;
    });
    return rounded(total);
}

ValueWithBound limit_at_zero(const std::function<ValueWithBound(const HPReal&)>& f, std::string& note) {
    const HPReal e1("1e-4"), e2("1e-5"), e3("1e-6");
    const ValueWithBound f1 = f(e1), f2 = f(e2), f3 = f(e3);
    const HPReal d1 = f1.value - f2.value, d2 = f2.value - f3.value;
    // Lagrange weights for evaluation at 0
    const HPReal w1 = e2 * e3 / ((e1 - e2) * (e1 - e3));
    const HPReal w2 = e1 * e3 / ((e2 - e1) * (e2 - e3));
    const HPReal w3 = e1 * e2 / ((e3 - e1) * (e3 - e2));
    const HPReal value = w1 * f1.value + w2 * f2.value + w3 * f3.value;
    const HPReal linear = (e2 * f3.value - e3 * f2.value) / (e2 - e3);
    const HPReal err = abs(value - linear) + abs(w1) * f1.abs_error + abs(w2) * f2.abs_error + abs(w3) * f3.abs_error;
    double order = 1;
    if (d1 != 0 && d2 != 0) order = static_cast<double>(log10(abs(d1) / abs(d2)));
    std::ostringstream os;
    os.precision(3);
    os << "observed order " << order;
    note = os.str();
    // an exactly vanishing difference means the limit is reached identically
    if (d1 != 0 && d2 != 0 && std::fabs(order - 1) > 0.25)
        throw NoConvergence("limit: observed order " + std::to_string(order) + ", expected 1");
    return {value, err, false};
}

std::vector<Params> make_samples(const std::vector<std::string>& keys,
                                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<Params> out;
    for (const auto& row : rows) {
        if (row.size() != keys.size()) throw Error("make_samples: row size mismatch");
        Params p;
        for (std::size_t i = 0; i < keys.size(); ++i) p[keys[i]] = row[i];
        out.push_back(std::move(p));
    }
    return out;
}

void OnesTracker::advance() {
    ++n;
    const HPReal id = 1 / (HPReal(n) + a - 1);
    HPReal pw = id;
    for (int j = 1; j <= kmax; ++j) {
        p[j] += pw;
        pw *= id;
    }
}

HPReal OnesTracker::plain(int k) const {
    if (k == 0) return 1;
    return ones_from_power_sums(p, k).plain[k];
}

HPReal OnesTracker::star(int k) const {
    if (k == 0) return 1;
    return ones_from_power_sums(p, k).star[k];
}

}  // namespace hz::ids
