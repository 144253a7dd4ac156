#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hz {

using BigInt = boost::multiprecision::cpp_int;

// Immutable multi-index (k_1,...,k_r). The empty composition only stands in for the
// empty index of nested sums.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    static Composition ones(int count);  // {1}_count, empty when count == 0
    static Composition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    bool empty() const { return parts_.empty(); }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool admissible() const { return !parts_.empty() && parts_[0] >= 2; }

    // (k_{from},...,k_r), possibly empty
    Composition tail(int from = 1) const;
    Composition concat(const Composition& other) const;

    std::string str() const;
    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts);
    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int total() const;
    int operator[](std::size_t i) const { return parts_[i]; }
    bool operator==(const WeakComposition&) const = default;

private:
    std::vector<int> parts_;
};

Composition hoffman_dual(const Composition& k);
Composition plus_first(const Composition& k);
Composition reverse(const Composition& k);
Composition dual_index(const Composition& m);
// ((reverse k)^dual)_+ : the index appearing on the zeta side of the integral formulas
Composition rev_dual_plus(const Composition& k);
std::vector<Composition> refinements(const Composition& k);
std::vector<Composition> compositions_of(int weight);

void for_each_weak_composition(int total, int parts,
                               const std::function<void(const WeakComposition&)>& fn);
std::vector<WeakComposition> weak_compositions(int total, int parts);
BigInt weak_composition_count(int total, int parts);

BigInt binomial(int n, int k);
BigInt binom_weight(const Composition& k, const WeakComposition& j);
// componentwise k + j
Composition add_weak(const Composition& k, const WeakComposition& j);

}  // namespace hz
