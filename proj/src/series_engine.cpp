#include "hzeta/series_engine.hpp"

#include "hzeta/errors.hpp"
#include "hzeta/iterated.hpp"
#include "hzeta/specfun.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace hz {

namespace {

// memo of evaluated constants, keyed by a textual description and the working precision
class ConstantTable {
public:
    bool lookup(const std::string& key, const HPReal& tol, ValueWithBound& out) {
        std::shared_lock lock(mu_);
        auto it = values_.find({key, current_bits()});
        if (it == values_.end() || it->second.abs_error > tol) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& key, const ValueWithBound& v) {
        std::unique_lock lock(mu_);
        auto [it, fresh] = values_.try_emplace({key, current_bits()}, v);
        if (!fresh && v.abs_error < it->second.abs_error) it->second = v;
    }
    void clear() {
        std::unique_lock lock(mu_);
        values_.clear();
    }

private:
    std::shared_mutex mu_;
    std::map<std::pair<std::string, int>, ValueWithBound> values_;
};

ConstantTable& constants() {
    static ConstantTable t;
    return t;
}

std::string exact_str(const HPReal& x) { return x.str(0, std::ios_base::scientific); }

template <class F>
ValueWithBound memo(const std::string& key, const HPReal& tol, F&& compute) {
    ValueWithBound v;
    if (constants().lookup(key, tol, v)) return v;
    v = compute();
    constants().store(key, v);
    return v;
}

bool is_integer(const HPReal& x) { return x == round(x); }

void require_pole_free(const HPReal& shift_minus_one, long min_n, const char* what) {
    // n + shift - 1 = 0 for some reachable n >= min_n
    if (is_integer(shift_minus_one) && -shift_minus_one >= min_n)
        throw PoleError(std::string(what) + ": denominator vanishes at n = " + exact_str(-shift_minus_one));
}

ShiftVector tail_shifts(const ShiftVector& a) {
    return ShiftVector(std::vector<HPReal>(a.shifts.begin() + 1, a.shifts.end()));
}

ValueWithBound hurwitz_shifted(int s, const HPReal& a) {
    // sum_{n>=1} (n+a-1)^{-s}; leading terms summed directly while n+a-1 <= 0
    require_pole_free(a - 1, 1, "zeta");
    HPReal head = 0, b = a;
    while (b <= 0) {
        head += pow_int(b, -s);
        b += 1;
    }
    const HPReal v = head + hurwitz_zeta(s, b);
    return {v, abs(v) * epsilon() * 16, true};
}

ValueWithBound nested_zeta(const Composition& k, const ShiftVector& a, const HPReal& tol,
                           const TailStrategy& strategy, bool star) {
    if (k.empty()) return ValueWithBound::exact(HPReal(1));
    if (!k.admissible()) throw NonAdmissible("index " + k.str() + " is not admissible (k_1 = 1)");
    if (a.size() != k.depth())
        throw DimensionMismatch("index depth " + std::to_string(k.depth()) + " but " + std::to_string(a.size()) +
                                " shifts");
    const int r = k.depth();
    for (int j = 0; j < r; ++j) require_pole_free(a[j] - 1, star ? 1 : r - j, "zeta");
    if (r == 1) return hurwitz_shifted(k[0], a[0]);

    std::ostringstream key;
    key << (star ? "zs:" : "z:") << k.str();
    for (const auto& s : a.shifts) key << ';' << exact_str(s);
    return memo(key.str(), tol, [&] {
        auto inner = std::make_shared<NestedSum>(NestedSum::powers(k.tail(), tail_shifts(a), star));
        const int e = k[0];
        const HPReal c = a[0] - 1;
        TermFn term = [inner, e, c, star](long n) -> HPReal {
            if (star) inner->advance();
            const HPReal s = inner->value();
            HPReal t = 0;
            if (s != 0) t = pow_int(c + n, -e) * s;
            if (!star) inner->advance();
            return t;
        };
        SeriesShape shape{{HPReal(1 - e)}, r - 1};
        return sum_extrapolated(term, shape, tol, strategy);
    });
}

// x^n ζ_{n-1}(...)/n^k_1 style direct sums; parity filter for the A-functions
ValueWithBound geometric_polylog(const Composition& k, const HPReal& x, const HPReal& tol,
                                 const TailStrategy& strategy, bool parity) {
    const int r = k.depth();
    std::vector<NestedSum::SlotFn> slots;
    for (int j = 1; j < r; ++j) {
        const int e = k[j];
        const long want = (r - j) % 2;  // n_j ≡ r+1-j (1-based)
        slots.emplace_back([e, want, parity](long n) -> HPReal {
            if (parity && n % 2 != want) return 0;
            return pow_int(HPReal(n), -e);
        });
    }
    auto inner = std::make_shared<NestedSum>(std::move(slots), false);
    auto xpow = std::make_shared<HPReal>(1);
    const int e = k[0];
    const long want0 = r % 2;
    TermFn term = [=](long n) -> HPReal {
        *xpow *= x;
        const HPReal s = inner->value();
        HPReal t = 0;
        if (s != 0 && (!parity || n % 2 == want0)) t = *xpow * s * pow_int(HPReal(n), -e);
        inner->advance();
        return t;
    };
    const HPReal weight = parity ? ldexp(HPReal(1), r) : HPReal(1);
    // zeta_{m-1}(k_2..) <= (1+log m)^{r-1}; successive ratio of that bound <= x (1+1/m)^{r-1}
    TailBoundFn bound = [x, r, weight](long n, const HPReal&) -> HPReal {
        const HPReal rho = x * pow_int(1 + HPReal(1) / (n + 1), r - 1);
        if (rho >= 1) return -1;
        const HPReal b = pow(x, n + 1) * pow_int(1 + log(HPReal(n + 1)), r - 1);
        return weight * b / (1 - rho);
    };
    ValueWithBound v = sum_direct(term, bound, tol, strategy);
    v.value *= weight;
    return v;
}

}  // namespace

void clear_series_cache() { constants().clear(); }

ValueWithBound htmzv(const Composition& k, const ShiftVector& a, const HPReal& tol, const TailStrategy& strategy) {
    return nested_zeta(k, a, tol, strategy, false);
}

ValueWithBound htmzsv(const Composition& k, const ShiftVector& a, const HPReal& tol,
                      const TailStrategy& strategy) {
    return nested_zeta(k, a, tol, strategy, true);
}

ValueWithBound htmzv(const Composition& k, const HPReal& a, const HPReal& tol, const TailStrategy& strategy) {
    return htmzv(k, ShiftVector::constant(a, k.depth()), tol, strategy);
}

ValueWithBound htmzsv(const Composition& k, const HPReal& a, const HPReal& tol, const TailStrategy& strategy) {
    return htmzsv(k, ShiftVector::constant(a, k.depth()), tol, strategy);
}

ValueWithBound htmtv(const Composition& k, const HPReal& alpha, const HPReal& tol, const TailStrategy& strategy) {
    if (k.empty()) return ValueWithBound::exact(HPReal(1));
    const int r = k.depth();
    std::vector<HPReal> shifts;
    for (int j = 1; j <= r; ++j) shifts.push_back((HPReal(j - r) + alpha) / 2);
    const HPReal scale = ldexp(HPReal(1), r - k.weight());
    return scale * htmzv(k, ShiftVector(shifts), tol / scale, strategy);
}

ValueWithBound mpl(const Composition& k, const HPReal& x, const HPReal& tol, const TailStrategy& strategy) {
    if (k.empty()) throw DomainError("mpl: empty index");
    if (x < 0 || x > 1) throw DomainError("mpl: x must lie in [0, 1], got " + to_decimal(x, 10));
    if (x == 0) return ValueWithBound::exact(HPReal(0));
    if (x == 1) {
        if (k[0] == 1) throw DomainError("mpl: Li_k(1) diverges when k_1 = 1");
        return htmzv(k, HPReal(1), tol, strategy);
    }
    if (x <= HPReal(1) / 2) return geometric_polylog(k, x, tol, strategy, false);
    return path_near_one(PathKernel::mpl, k, 1 - x, tol);
}

ValueWithBound mpl_complement(const Composition& k, const HPReal& s, const HPReal& tol) {
    if (s < 0 || s > 1) throw DomainError("mpl: 1-x must lie in [0, 1]");
    if (s == 0 || s > HPReal(1) / 2) return mpl(k, 1 - s, tol);
    return path_near_one(PathKernel::mpl, k, s, tol);
}

ValueWithBound mpl_landen(const Composition& k, const HPReal& x, const HPReal& tol, const TailStrategy& strategy) {
    if (x < 0 || x >= 1) throw DomainError("mpl_landen: x must lie in [0, 1), got " + to_decimal(x, 10));
    const auto refs = refinements(k);
    const HPReal part_tol = tol / static_cast<long>(refs.size());
    ValueWithBound total = ValueWithBound::exact(HPReal(0));
    for (const auto& l : refs) total = total + mpl(l, x, part_tol, strategy);
    return (k.depth() % 2 == 0) ? total : -total;
}

ValueWithBound mpl_landen_complement(const Composition& k, const HPReal& s, const HPReal& tol) {
    if (s <= 0 || s > 1) throw DomainError("mpl_landen: 1-x must lie in (0, 1]");
    const auto refs = refinements(k);
    const HPReal part_tol = tol / static_cast<long>(refs.size());
    ValueWithBound total = ValueWithBound::exact(HPReal(0));
    for (const auto& l : refs) total = total + mpl_complement(l, s, part_tol);
    return (k.depth() % 2 == 0) ? total : -total;
}

ValueWithBound kta(const Composition& k, const HPReal& x, const HPReal& tol, const TailStrategy& strategy) {
    if (k.empty()) throw DomainError("kta: empty index");
    if (x < 0 || x > 1) throw DomainError("kta: x must lie in [0, 1], got " + to_decimal(x, 10));
    if (x == 0) return ValueWithBound::exact(HPReal(0));
    if (x == 1) {
        if (k[0] == 1) throw DomainError("kta: A(k; 1) diverges when k_1 = 1");
        return htmtv(k, HPReal(1), tol, strategy);
    }
    if (x <= HPReal(1) / 2) return geometric_polylog(k, x, tol, strategy, true);
    return path_near_one(PathKernel::kta, k, (1 - x) / (1 + x), tol);
}

ValueWithBound kta_from_u(const Composition& k, const HPReal& u, const HPReal& tol) {
    if (u < 0 || u > 1) throw DomainError("kta: u must lie in [0, 1]");
    if (u == 0 || u > HPReal(1) / 3) return kta(k, (1 - u) / (1 + u), tol);
    return path_near_one(PathKernel::kta, k, u, tol);
}

ValueWithBound apery_I(const Composition& k, int kk, const HPReal& alpha, const HPReal& tol,
                       const TailStrategy& strategy) {
    if (k.empty() || kk < 0) throw DomainError("apery_I: need a nonempty index and kk >= 0");
    if (!(alpha < 1)) throw DomainError("apery_I: alpha must be < 1");
    require_pole_free(-alpha, 1, "apery_I");
    std::ostringstream key;
    key << "aI:" << k.str() << ';' << kk << ';' << exact_str(alpha);
    return memo(key.str(), tol, [&] {
        auto inner = std::make_shared<NestedSum>(NestedSum::powers(k.tail(), ShiftVector::constant(HPReal(1), k.depth() - 1), false));
        auto p = std::make_shared<std::vector<HPReal>>(kk + 1, HPReal(0));
        auto inv_binom = std::make_shared<HPReal>(1);
        const int e = k[0] + 1;
        TermFn term = [=](long n) -> HPReal {
            const HPReal d = HPReal(n) - alpha;
            *inv_binom *= HPReal(n) / d;
            const HPReal id = 1 / d;
            HPReal pw = id;
            for (int j = 1; j <= kk; ++j) {
                (*p)[j] += pw;
                pw *= id;
            }
            const HPReal star = ones_from_power_sums(*p, kk).star[kk];
            const HPReal t = inner->value() * star * *inv_binom * pow_int(HPReal(n), -e);
            inner->advance();
            return t;
        };
        SeriesShape shape{{alpha - k[0]}, kk + k.depth() - 1};
        return sum_extrapolated(term, shape, tol, strategy);
    });
}

ValueWithBound apery_II(int k_head, const Composition& star_tail, int m, const HPReal& alpha, const HPReal& tol,
                        const TailStrategy& strategy) {
    if (k_head < 0) throw DomainError("apery_II: k must be >= 0");
    if (!(alpha < 1)) throw DomainError("apery_II: alpha must be < 1");
    if (!(alpha - m < 0)) throw DomainError("apery_II: series diverges (need m > alpha)");
    require_pole_free(alpha - 1, 1, "apery_II");
    std::ostringstream key;
    key << "aII:" << k_head << ';' << star_tail.str() << ';' << m << ';' << exact_str(alpha);
    return memo(key.str(), tol, [&] {
        auto star = std::make_shared<NestedSum>(
            NestedSum::powers(star_tail, ShiftVector::constant(HPReal(1), star_tail.depth()), true));
        auto p = std::make_shared<std::vector<HPReal>>(k_head + 1, HPReal(0));
        auto binom = std::make_shared<HPReal>(1);
        TermFn term = [=](long n) -> HPReal {
            const HPReal d = HPReal(n) + alpha - 1;
            *binom *= d / n;
            const HPReal id = 1 / d;
            HPReal pw = id;
            for (int j = 1; j <= k_head; ++j) {
                (*p)[j] += pw;
                pw *= id;
            }
            star->advance();
            HPReal ones = 1;
            if (k_head > 0) {
                // binom * zeta_n({1}_k; alpha) stays finite as alpha -> 0; keep the product together
                ones = ones_from_power_sums(*p, k_head).plain[k_head];
            }
            return *binom * ones * star->value() * pow_int(HPReal(n), -m);
        };
        SeriesShape shape{{alpha - m}, k_head + star_tail.depth()};
        return sum_extrapolated(term, shape, tol, strategy);
    });
}

ValueWithBound apery_III(const Composition& k, const Composition& l, int m, const HPReal& alpha,
                         const HPReal& beta, const HPReal& tol, const TailStrategy& strategy) {
    if (m < -1) throw DomainError("apery_III: m must be >= -1");
    if (!(alpha < 1) || !(beta < 1)) throw DomainError("apery_III: need alpha, beta < 1");
    require_pole_free(alpha - 1, 1, "apery_III");
    const HPReal sigma = alpha + beta - m - 2;
    if (!(sigma < 0)) throw DomainError("apery_III: series diverges (need alpha + beta < m + 2)");
    std::ostringstream key;
    key << "aIII:" << k.str() << ';' << l.str() << ';' << m << ';' << exact_str(alpha) << ';' << exact_str(beta);
    return memo(key.str(), tol, [&] {
        auto zk = std::make_shared<NestedSum>(NestedSum::powers(k, ShiftVector::constant(alpha, k.depth()), false));
        auto zl = std::make_shared<NestedSum>(NestedSum::powers(l, ShiftVector::constant(1 - beta, l.depth()), true));
        auto ratio = std::make_shared<HPReal>(1);
        const int e = m + 2;
        TermFn term = [=](long n) -> HPReal {
            *ratio *= (HPReal(n) + alpha - 1) / (HPReal(n) - beta);
            zk->advance();
            zl->advance();
            return zk->value() * zl->value() * *ratio * pow_int(HPReal(n), -e);
        };
        SeriesShape shape{{sigma}, k.depth() + l.depth()};
        return sum_extrapolated(term, shape, tol, strategy);
    });
}

namespace {

ValueWithBound ones_weighted_sum(int m, const std::function<HPReal(long)>& denom_inv, const HPReal& sigma,
                                 const std::string& key, const HPReal& tol, const TailStrategy& strategy) {
    return memo(key, tol, [&] {
        auto p = std::make_shared<std::vector<HPReal>>(m + 1, HPReal(0));
        TermFn term = [=](long n) -> HPReal {
            const HPReal e = (m == 0) ? HPReal(1) : ones_from_power_sums(*p, m).plain[m];
            const HPReal t = e * denom_inv(n);
            const HPReal id = HPReal(1) / n;
            HPReal pw = id;
            for (int j = 1; j <= m; ++j) {
                (*p)[j] += pw;
                pw *= id;
            }
            return t;
        };
        return sum_extrapolated(term, SeriesShape{{sigma}, m}, tol, strategy);
    });
}

}  // namespace

ValueWithBound param_euler_sum(int m, const HPReal& a, const HPReal& b, const HPReal& tol,
                               const TailStrategy& strategy) {
    if (m < 0) throw DomainError("param_euler_sum: m must be >= 0");
    require_pole_free(a, 1, "param_euler_sum");
    require_pole_free(b, 1, "param_euler_sum");
    const std::string key = "pe:" + std::to_string(m) + ';' + exact_str(a) + ';' + exact_str(b);
    return ones_weighted_sum(
        m, [a, b](long n) { return 1 / ((HPReal(n) + a) * (HPReal(n) + b)); }, HPReal(-1), key, tol, strategy);
}

ValueWithBound param_euler_pow(int m, int k, const HPReal& alpha, const HPReal& tol, const TailStrategy& strategy) {
    if (m < 0 || k < 1) throw DomainError("param_euler_pow: need m >= 0 and k >= 1");
    require_pole_free(alpha, 1, "param_euler_pow");
    const std::string key = "pp:" + std::to_string(m) + ';' + std::to_string(k) + ';' + exact_str(alpha);
    return ones_weighted_sum(
        m, [alpha, k](long n) { return pow_int(HPReal(n) + alpha, -(k + 1)); }, HPReal(-k), key, tol, strategy);
}

ValueWithBound arakawa_kaneko(AKKind kind, int s, const Composition& k, const HPReal& tol,
                              const TailStrategy& strategy) {
    if (s < 1) throw DomainError("arakawa_kaneko: s must be >= 1");
    if (k.empty()) throw DomainError("arakawa_kaneko: empty index");
    const int kk = s - 1;
    const Composition kappa = rev_dual_plus(k);
    const auto js = weak_compositions(kk, kappa.depth());
    ValueWithBound total = ValueWithBound::exact(HPReal(0));
    for (const auto& j : js) {
        const HPReal b(binom_weight(kappa, j).str());
        const Composition idx = add_weak(kappa, j);
        const HPReal part_tol = tol / (b * static_cast<long>(js.size()));
        ValueWithBound v;
        switch (kind) {
            case AKKind::xi: v = htmzv(idx, HPReal(1), part_tol, strategy); break;
            case AKKind::psi: v = htmtv(idx, HPReal(1), part_tol, strategy); break;
            case AKKind::eta: v = htmzsv(idx, HPReal(1), part_tol, strategy); break;
        }
        total = total + b * v;
    }
    if (kind == AKKind::eta && k.depth() % 2 == 0) total = -total;
    return total;
}

ValueWithBound htmzv_pbc(const HPReal& alpha, const Composition& k, const HPReal& beta, const HPReal& tol,
                         const TailStrategy& strategy) {
    return htmzv_pbc_dalpha(alpha, 0, k, beta, tol, strategy);
}

ValueWithBound htmzv_pbc_dalpha(const HPReal& alpha, int l, const Composition& k, const HPReal& beta,
                                const HPReal& tol, const TailStrategy& strategy) {
    if (k.empty()) throw DomainError("pbc: empty index");
    if (l < 0) throw DomainError("pbc: derivative order must be >= 0");
    if (!(alpha < 1)) throw DomainError("pbc: alpha must be < 1");
    const int r = k.depth();
    if (r >= 2 && k[0] < 2) throw NonAdmissible("pbc: depth >= 2 needs k_1 >= 2");
    for (int j = 0; j < r; ++j) require_pole_free(beta - 1, r - j, "pbc");
    if (l > 0) require_pole_free(alpha - 1, 1, "pbc");
    std::ostringstream key;
    key << "pbc:" << l << ';' << k.str() << ';' << exact_str(alpha) << ';' << exact_str(beta);
    return memo(key.str(), tol, [&] {
        // binom(n+alpha-2, n-1) zeta_{n-1}({1}_l; alpha), advanced in step with the innermost index
        struct Weight {
            long n = 1;
            HPReal w = 1;
            std::vector<HPReal> p;
            long cached_n = 0;
            HPReal cached;
        };
        auto wt = std::make_shared<Weight>();
        wt->p.assign(l + 1, HPReal(0));
        auto weight_at = [wt, alpha, l](long n) -> HPReal {
            while (wt->n < n) {
                const HPReal d = HPReal(wt->n) + alpha - 1;
                wt->w *= d / wt->n;
                const HPReal id = 1 / d;
                HPReal pw = id;
                for (int j = 1; j <= l; ++j) {
                    wt->p[j] += pw;
                    pw *= id;
                }
                ++wt->n;
            }
            if (l == 0) return wt->w;
            if (wt->cached_n != n) {
                wt->cached = wt->w * ones_from_power_sums(wt->p, l).plain[l];
                wt->cached_n = n;
            }
            return wt->cached;
        };
        const HPReal c = beta - 1;
        std::vector<HPReal> sig{alpha - k[0]};
        if (r == 1) {
            const int e = k[0];
            TermFn term = [=](long n) -> HPReal { return weight_at(n) * pow_int(c + n, -e); };
            return sum_extrapolated(term, SeriesShape{sig, l}, tol, strategy);
        }
        std::vector<NestedSum::SlotFn> slots;
        for (int j = 1; j < r; ++j) {
            const int e = k[j];
            if (j == r - 1)
                slots.emplace_back([=](long n) -> HPReal { return weight_at(n) * pow_int(c + n, -e); });
            else
                slots.emplace_back([=](long n) -> HPReal { return pow_int(c + n, -e); });
        }
        auto inner = std::make_shared<NestedSum>(std::move(slots), false);
        const int e = k[0];
        TermFn term = [=](long n) -> HPReal {
            const HPReal s = inner->value();
            HPReal t = 0;
            if (s != 0) t = pow_int(c + n, -e) * s;
            inner->advance();
            return t;
        };
        sig.push_back(HPReal(1 - k[0]));
        return sum_extrapolated(term, SeriesShape{sig, r - 1 + l}, tol, strategy);
    });
}

}  // namespace hz
