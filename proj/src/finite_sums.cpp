#include "hzeta/finite_sums.hpp"

#include "hzeta/errors.hpp"
#include "hzeta/specfun.hpp"

namespace hz {

ShiftVector ShiftVector::constant(const HPReal& a, int depth) {
    return ShiftVector(std::vector<HPReal>(static_cast<std::size_t>(depth), a));
}

NestedSum::NestedSum(std::vector<SlotFn> slots, bool star)
    : slots_(std::move(slots)), star_(star), acc_(slots_.size() + 1, HPReal(0)) {
    acc_.back() = 1;
}

NestedSum NestedSum::powers(const Composition& k, const ShiftVector& a, bool star) {
    if (k.depth() != a.size())
        throw DimensionMismatch("nested sum: index depth " + std::to_string(k.depth()) + " vs " +
                                std::to_string(a.size()) + " shifts");
    std::vector<SlotFn> slots;
    for (int j = 0; j < k.depth(); ++j) {
        const int e = k[j];
        const HPReal shift = a[j] - 1;
        slots.emplace_back([e, shift](long n) {
            HPReal d = shift + n;
            if (d == 0)
                throw PoleError("denominator n + a - 1 vanishes at n = " + std::to_string(n));
            return pow_int(d, -e);
        });
    }
    return NestedSum(std::move(slots), star);
}

void NestedSum::advance() {
    ++n_;
    const int r = depth();
    if (star_) {
        // inner slots first so outer ones see sums including n
        for (int j = r - 1; j >= 0; --j) acc_[j] += slots_[j](n_) * acc_[j + 1];
    } else {
        // outer slots first so they see inner sums up to n-1; slot j needs n >= r-j
        for (int j = 0; j < r; ++j) {
            if (n_ < r - j) continue;
            if (acc_[j + 1] == 0 && j + 1 < r) continue;
            acc_[j] += slots_[j](n_) * acc_[j + 1];
        }
    }
}

HPReal NestedSum::value() const { return acc_[0]; }

HPReal NestedSum::suffix_value(int levels) const { return acc_[depth() - levels]; }

namespace {

HPReal run(long n, const Composition& k, const ShiftVector& a, bool star) {
    if (n < 0) throw DomainError("nested sum: negative upper limit");
    if (k.empty()) return 1;
    NestedSum s = NestedSum::powers(k, a, star);
    for (long i = 0; i < n; ++i) s.advance();
    return s.value();
}

}  // namespace

HPReal mhs(long n, const Composition& k, const ShiftVector& a) { return run(n, k, a, false); }
HPReal mhss(long n, const Composition& k, const ShiftVector& a) { return run(n, k, a, true); }
HPReal mhs(long n, const Composition& k, const HPReal& a) {
    return mhs(n, k, ShiftVector::constant(a, k.depth()));
}
HPReal mhss(long n, const Composition& k, const HPReal& a) {
    return mhss(n, k, ShiftVector::constant(a, k.depth()));
}
HPReal mhs(long n, const Composition& k) { return mhs(n, k, HPReal(1)); }
HPReal mhss(long n, const Composition& k) { return mhss(n, k, HPReal(1)); }

OnesSums ones_from_power_sums(const std::vector<HPReal>& p, int kmax) {
    // p[j] holds the j-th power sum; p[0] unused
    OnesSums out;
    out.plain.assign(kmax + 1, HPReal(0));
    out.star.assign(kmax + 1, HPReal(0));
    out.plain[0] = 1;
    out.star[0] = 1;
    for (int m = 1; m <= kmax; ++m) {
        HPReal e = 0, h = 0;
        for (int i = 1; i <= m; ++i) {
            const HPReal t = out.plain[m - i] * p[i];
            e += (i % 2 == 1) ? t : HPReal(-t);
            h += out.star[m - i] * p[i];
        }
        out.plain[m] = e / m;
        out.star[m] = h / m;
    }
    return out;
}

OnesSums ones_sums(long n, int kmax, const HPReal& a) {
    if (n < 0 || kmax < 0) throw DomainError("ones_sums: negative argument");
    std::vector<HPReal> p(kmax + 1, HPReal(0));
    for (long i = 1; i <= n; ++i) {
        const HPReal d = a + (i - 1);
        if (d == 0) throw PoleError("ones_sums: pole at i = " + std::to_string(i));
        const HPReal inv = 1 / d;
        HPReal pw = inv;
        for (int j = 1; j <= kmax; ++j) {
            p[j] += pw;
            pw *= inv;
        }
    }
    return ones_from_power_sums(p, kmax);
}

std::pair<HPReal, HPReal> t_sums(long n, const Composition& k) {
    const HPReal half = HPReal(1) / 2;
    const HPReal scale = ldexp(HPReal(1), -k.weight());
    return {scale * mhs(n, k, half), scale * mhss(n, k, half)};
}

}  // namespace hz
