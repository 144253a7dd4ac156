#pragma once

#include "hzeta/compositions.hpp"
#include "hzeta/hpreal.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace hz {

struct ShiftVector {
    std::vector<HPReal> shifts;

    ShiftVector() = default;
    explicit ShiftVector(std::vector<HPReal> s) : shifts(std::move(s)) {}
    static ShiftVector constant(const HPReal& a, int depth);
    int size() const { return static_cast<int>(shifts.size()); }
    const HPReal& operator[](std::size_t i) const { return shifts[i]; }
};

// Incremental nested sum over n >= n_1 > ... > n_r > 0 (or >= for star sums) of
// prod f_j(n_j). advance() moves the upper limit from n-1 to n in O(r).
class NestedSum {
public:
    using SlotFn = std::function<HPReal(long)>;

    NestedSum(std::vector<SlotFn> slots, bool star);
    // slot j contributes (n_j + a_j - 1)^{-k_j}
    static NestedSum powers(const Composition& k, const ShiftVector& a, bool star);

    void advance();
    long upper() const { return n_; }
    int depth() const { return static_cast<int>(slots_.size()); }
    // current value at the present upper limit; 1 for the empty index
    HPReal value() const;
    // partial sum of the last `levels` slots (suffix (k_{r-levels+1},...,k_r))
    HPReal suffix_value(int levels) const;

private:
    std::vector<SlotFn> slots_;
    bool star_;
    long n_ = 0;
    std::vector<HPReal> acc_;  // acc_[j] = sum over the suffix starting at slot j
};

HPReal mhs(long n, const Composition& k, const ShiftVector& a);
HPReal mhss(long n, const Composition& k, const ShiftVector& a);
HPReal mhs(long n, const Composition& k, const HPReal& a);
HPReal mhss(long n, const Composition& k, const HPReal& a);
HPReal mhs(long n, const Composition& k);
HPReal mhss(long n, const Composition& k);

struct OnesSums {
    std::vector<HPReal> plain;  // zeta_n({1}_m; a), m = 0..kmax
    std::vector<HPReal> star;   // zeta*_n({1}_m; a)
};

// Newton identities from power sums p_j = sum_{i<=n} (i+a-1)^{-j}
OnesSums ones_from_power_sums(const std::vector<HPReal>& p, int kmax);
OnesSums ones_sums(long n, int kmax, const HPReal& a);

// t_n(k) = 2^{-|k|} zeta_n(k; 1/2) and the star analogue
std::pair<HPReal, HPReal> t_sums(long n, const Composition& k);

}  // namespace hz
