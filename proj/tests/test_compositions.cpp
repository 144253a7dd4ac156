#include "hzeta/compositions.hpp"
#include "hzeta/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hz;

namespace {

// brute-force Hoffman dual: cut positions of the weight line are complemented
Composition dual_by_cuts(const Composition& k) {
    const int w = k.weight();
    std::set<int> cuts;
    int acc = 0;
    for (int i = 0; i + 1 < k.depth(); ++i) cuts.insert(acc += k[i]);
    std::vector<int> parts;
    int last = 0;
    for (int pos = 1; pos < w; ++pos)
        if (!cuts.count(pos)) {
            parts.push_back(pos - last);
            last = pos;
        }
    parts.push_back(w - last);
    return Composition(parts);
}

Composition random_composition(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> wd(1, max_weight), bit(0, 1);
    const int w = wd(rng);
    std::vector<int> parts{1};
    for (int i = 1; i < w; ++i) {
        if (bit(rng)) parts.push_back(1);
        else ++parts.back();
    }
    return Composition(parts);
}

}  // namespace

TEST_CASE("hoffman dual examples") {
    CHECK(hoffman_dual({1, 1, 2, 1}) == Composition{3, 2});
    CHECK(hoffman_dual({1, 2, 1, 1}) == Composition{2, 3});
    CHECK(hoffman_dual({1}) == Composition{1});
}

TEST_CASE("hoffman dual agrees with the cut-complement oracle") {
    for (int w = 1; w <= 8; ++w)
        for (const auto& k : compositions_of(w)) {
            const Composition d = hoffman_dual(k);
            CHECK(d == dual_by_cuts(k));
            CHECK(hoffman_dual(d) == k);
            CHECK(d.weight() == k.weight());
            CHECK(d.depth() == k.weight() + 1 - k.depth());
        }
}

TEST_CASE("plus_first and reverse") {
    CHECK(plus_first({2, 2}) == Composition{3, 2});
    CHECK(plus_first({1}) == Composition{2});
    CHECK(plus_first({1, 3, 1}) == Composition{2, 3, 1});
    CHECK(reverse({2, 1, 3}) == Composition{3, 1, 2});
    CHECK(reverse({5}) == Composition{5});
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Composition k = random_composition(rng, 10);
        CHECK(reverse(reverse(k)) == k);
    }
}

TEST_CASE("dual_index") {
    CHECK(dual_index({3}) == Composition{2, 1});
    CHECK(dual_index({2}) == Composition{2});
    CHECK(dual_index({2, 1}) == Composition{3});
    CHECK_THROWS_AS(dual_index({1, 2}), NonAdmissible);
    for (int w = 2; w <= 7; ++w)
        for (const auto& m : compositions_of(w)) {
            if (!m.admissible()) continue;
            const Composition d = dual_index(m);
            CHECK(d.admissible());
            CHECK(d.weight() == w);
            CHECK(dual_index(d) == m);
            // m = k_+ gives dual_index(m) = (1, reverse(k))^vee
            std::vector<int> one_rev{1};
            for (int i = m.depth() - 1; i >= 0; --i) one_rev.push_back(i == 0 ? m[0] - 1 : m[i]);
            CHECK(d == hoffman_dual(Composition(one_rev)));
        }
}

TEST_CASE("refinements") {
    auto as_set = [](const std::vector<Composition>& v) { return std::set<Composition>(v.begin(), v.end()); };
    CHECK(as_set(refinements({2})) == std::set<Composition>{{2}, {1, 1}});
    CHECK(as_set(refinements({1, 1})) == std::set<Composition>{{1, 1}});
    CHECK(as_set(refinements({3})) == std::set<Composition>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
    for (int w = 1; w <= 7; ++w)
        for (const auto& k : compositions_of(w)) {
            const auto r = refinements(k);
            CHECK(r.size() == (std::size_t(1) << (k.weight() - k.depth())));
            CHECK(as_set(r).size() == r.size());
            for (const auto& c : r) CHECK(c.weight() == k.weight());
        }
}

TEST_CASE("weak compositions") {
    const auto z = weak_compositions(0, 3);
    REQUIRE(z.size() == 1);
    CHECK(z[0] == WeakComposition({0, 0, 0}));
    const auto two = weak_compositions(2, 2);
    CHECK(two.size() == 3);
    CHECK(weak_compositions(5, 3).size() == 21);
    for (int t = 0; t <= 6; ++t)
        for (int p = 1; p <= 4; ++p) {
            const auto all = weak_compositions(t, p);
            CHECK(BigInt(all.size()) == binomial(t + p - 1, p - 1));
            CHECK(weak_composition_count(t, p) == binomial(t + p - 1, p - 1));
            for (const auto& j : all) CHECK(j.total() == t);
        }
}

TEST_CASE("binom_weight") {
    CHECK(binom_weight({2, 1}, WeakComposition({0, 0})) == 1);
    CHECK(binom_weight({2}, WeakComposition({3})) == 4);
    CHECK(binom_weight({3, 2}, WeakComposition({1, 2})) == 9);
    CHECK_THROWS(binom_weight({3, 2}, WeakComposition({1})));
}

TEST_CASE("parse and print") {
    CHECK(Composition::parse("2,1,3") == Composition{2, 1, 3});
    CHECK(Composition{2, 1, 3}.str() == "2,1,3");
    CHECK_THROWS(Composition::parse("2,0"));
    CHECK_THROWS(Composition::parse("x"));
}
