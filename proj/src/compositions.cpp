#include "hzeta/compositions.hpp"

#include "hzeta/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hz {

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw DomainError("composition parts must be positive");
}

Composition Composition::ones(int count) {
    if (count < 0) throw DomainError("negative repetition count");
    return Composition(std::vector<int>(static_cast<std::size_t>(count), 1));
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) throw DomainError("malformed index '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw DomainError("malformed index '" + text + "'");
        }
        if (used != item.size()) throw DomainError("malformed index '" + text + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw DomainError("empty index");
    return Composition(std::move(parts));
}

int Composition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

Composition Composition::tail(int from) const {
    if (from >= depth()) return Composition();
    return Composition(std::vector<int>(parts_.begin() + from, parts_.end()));
}

Composition Composition::concat(const Composition& other) const {
    std::vector<int> v = parts_;
    v.insert(v.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(v));
}

std::string Composition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw DomainError("weak composition parts must be nonnegative");
}

int WeakComposition::total() const {
    int t = 0;
    for (int p : parts_) t += p;
    return t;
}

namespace {

void require_nonempty(const Composition& k, const char* op) {
    if (k.empty()) throw DomainError(std::string(op) + ": empty composition");
}

}  // namespace

// k = 1 [] 1 [] ... [] 1 with each gap a comma or a plus; the dual swaps the two.
Composition hoffman_dual(const Composition& k) {
    require_nonempty(k, "hoffman_dual");
    std::vector<bool> comma;  // gap i sits between unit i and i+1
    for (int i = 0; i < k.depth(); ++i) {
        for (int j = 1; j < k[i]; ++j) comma.push_back(false);
        if (i + 1 < k.depth()) comma.push_back(true);
    }
    std::vector<int> out{1};
    for (bool c : comma) {
        if (c)
            ++out.back();
        else
            out.push_back(1);
    }
    return Composition(std::move(out));
}

Composition plus_first(const Composition& k) {
    require_nonempty(k, "plus_first");
    std::vector<int> v = k.parts();
    ++v[0];
    return Composition(std::move(v));
}

Composition reverse(const Composition& k) {
    std::vector<int> v = k.parts();
    std::reverse(v.begin(), v.end());
    return Composition(std::move(v));
}

Composition dual_index(const Composition& m) {
    require_nonempty(m, "dual_index");
    if (!m.admissible()) throw NonAdmissible("dual_index needs m_1 >= 2, got (" + m.str() + ")");
    std::vector<int> v = m.parts();
    --v[0];
    return plus_first(hoffman_dual(reverse(Composition(std::move(v)))));
}

Composition rev_dual_plus(const Composition& k) { return plus_first(hoffman_dual(reverse(k))); }

std::vector<Composition> refinements(const Composition& k) {
    require_nonempty(k, "refinements");
    std::vector<Composition> acc{Composition()};
    for (int part : k.parts()) {
        std::vector<Composition> next;
        for (const auto& c : compositions_of(part))
            for (const auto& prefix : acc) next.push_back(prefix.concat(c));
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

std::vector<Composition> compositions_of(int weight) {
    if (weight < 1) throw DomainError("compositions_of: weight must be positive");
    std::vector<Composition> out;
    // bit i set means a comma after unit i
    const unsigned gaps = static_cast<unsigned>(weight - 1);
    for (unsigned long mask = 0; mask < (1ul << gaps); ++mask) {
        std::vector<int> v{1};
        for (unsigned i = 0; i < gaps; ++i) {
            if (mask & (1ul << i))
                v.push_back(1);
            else
                ++v.back();
        }
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void weak_rec(std::vector<int>& cur, std::size_t pos, int remaining,
              const std::function<void(const WeakComposition&)>& fn) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        fn(WeakComposition(cur));
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        weak_rec(cur, pos + 1, remaining - v, fn);
    }
}

}  // namespace

void for_each_weak_composition(int total, int parts,
                               const std::function<void(const WeakComposition&)>& fn) {
    if (parts < 1) throw DomainError("weak_compositions: parts must be positive");
    if (total < 0) throw DomainError("weak_compositions: negative total");
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    weak_rec(cur, 0, total, fn);
}

std::vector<WeakComposition> weak_compositions(int total, int parts) {
    std::vector<WeakComposition> out;
    for_each_weak_composition(total, parts, [&](const WeakComposition& j) { out.push_back(j); });
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt weak_composition_count(int total, int parts) { return binomial(total + parts - 1, parts - 1); }

BigInt binom_weight(const Composition& k, const WeakComposition& j) {
    if (k.depth() != j.size())
        throw DimensionMismatch("binom_weight: depth " + std::to_string(k.depth()) + " vs " +
                                std::to_string(j.size()));
    BigInt r = 1;
    for (int i = 0; i < k.depth(); ++i) r *= binomial(k[i] + j[i] - 1, j[i]);
    return r;
}

Composition add_weak(const Composition& k, const WeakComposition& j) {
    if (k.depth() != j.size()) throw DimensionMismatch("add_weak: depth mismatch");
    std::vector<int> v = k.parts();
    for (int i = 0; i < k.depth(); ++i) v[i] += j[i];
    return Composition(std::move(v));
}

}  // namespace hz
