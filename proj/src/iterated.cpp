#include "hzeta/iterated.hpp"

#include "hzeta/errors.hpp"
#include "hzeta/series_engine.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace hz {

std::string word_of(const Composition& k) {
    std::string w;
    for (int p : k.parts()) {
        w.append(static_cast<std::size_t>(p - 1), '0');
        w.push_back('1');
    }
    return w;
}

Composition composition_of(const std::string& word) {
    if (word.empty() || word.back() != '1') throw DomainError("word must end in letter 1: " + word);
    std::vector<int> parts;
    int run = 1;
    for (char c : word) {
        if (c == '0') {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    return Composition(parts);
}

namespace {

std::string swapped(const std::string& w) {
    std::string s = w;
    for (char& c : s) c = (c == '0') ? '1' : '0';
    return s;
}

// coefficient table c[j][n] of log^j(s) s^n
using Table = std::vector<std::vector<HPReal>>;

constexpr double kMaxS = 0.5;

int table_length(int bits, std::size_t letters) {
    return static_cast<int>(std::ceil((bits + 16) * std::log(2.0) / -std::log(kMaxS))) +
           4 * static_cast<int>(letters) + 8;
}

// integrate t^{n-1} log^j t from 0 to s, adding into out (n >= 1)
void add_power_log_integral(Table& out, int j, int n, const HPReal& coef) {
    // s^n sum_i (-1)^i j!/(j-i)! log^{j-i} s / n^{i+1}
    HPReal f = coef / n;
    for (int i = 0; i <= j; ++i) {
        out[j - i][n] += (i % 2 == 0) ? f : HPReal(-f);
        f *= HPReal(j - i) / n;
    }
}

Table build_table(PathKernel kernel, const std::string& word, int len) {
    Table c(1, std::vector<HPReal>(len + 1, HPReal(0)));
    c[0][0] = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int J = static_cast<int>(c.size()) - 1;
        if (*it == '0') {
            Table next(J + 2, std::vector<HPReal>(len + 1, HPReal(0)));
            for (int j = 0; j <= J; ++j) {
                if (c[j][0] != 0) next[j + 1][0] += c[j][0] / (j + 1);
                for (int n = 1; n <= len; ++n)
                    if (c[j][n] != 0) add_power_log_integral(next, j, n, c[j][n]);
            }
            c = std::move(next);
        } else {
            Table next(J + 1, std::vector<HPReal>(len + 1, HPReal(0)));
            for (int j = 0; j <= J; ++j) {
                HPReal even = 0, odd = 0, all = 0;
                for (int n = 0; n < len; ++n) {
                    HPReal g;
                    if (kernel == PathKernel::mpl) {
                        all += c[j][n];
                        g = all;
                    } else {
                        HPReal& acc = (n % 2 == 0) ? even : odd;
                        acc += c[j][n];
                        g = 2 * acc;
                    }
                    if (g != 0) add_power_log_integral(next, j, n + 1, g);
                }
            }
            c = std::move(next);
        }
    }
    return c;
}

struct TableCache {
    std::mutex mu;
    std::map<std::tuple<int, std::string, int>, std::shared_ptr<const Table>> tables;
};

TableCache& table_cache() {
    static TableCache c;
    return c;
}

std::shared_ptr<const Table> table_for(PathKernel kernel, const std::string& word) {
    const int bits = current_bits();
    auto key = std::make_tuple(static_cast<int>(kernel), word, bits);
    auto& cache = table_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.tables.find(key);
        if (it != cache.tables.end()) return it->second;
    }
    auto t = std::make_shared<const Table>(build_table(kernel, word, table_length(bits, word.size())));
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.tables.emplace(key, t).first->second;
}

struct ConstCache {
    std::mutex mu;
    std::map<std::tuple<int, std::string, int>, ValueWithBound> values;
};

ConstCache& const_cache() {
    static ConstCache c;
    return c;
}

}  // namespace

HPReal regularized_near_zero(PathKernel kernel, const std::string& word, const HPReal& s) {
    if (word.empty()) return 1;
    if (!(s > 0) || s > kMaxS) throw DomainError("near-zero expansion needs 0 < s <= 1/2");
    const auto table = table_for(kernel, word);
    const int len = static_cast<int>((*table)[0].size()) - 1;
    const double ls = -std::log(static_cast<double>(s));
    int n_use = len;
    if (ls > 0) {
        const double need = (current_bits() + 16) * std::log(2.0) / ls + 4.0 * word.size() + 8;
        if (need < len) n_use = static_cast<int>(need);
    }
    const HPReal L = log(s);
    HPReal total = 0, Lp = 1;
    for (const auto& row : *table) {
        HPReal h = 0;
        for (int n = n_use; n >= 0; --n) h = h * s + row[n];
        total += Lp * h;
        Lp *= L;
    }
    return total;
}

ValueWithBound regularized_constant(PathKernel kernel, const std::string& word, const HPReal& tol) {
    if (word.empty()) return ValueWithBound::exact(HPReal(1));
    auto key = std::make_tuple(static_cast<int>(kernel), word, current_bits());
    auto& cache = const_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.values.find(key);
        if (it != cache.values.end() && it->second.abs_error <= tol) return it->second;
    }
    ValueWithBound out;
    if (word[0] == '0') {
        // aim well below tol once, so later nodes with larger log factors hit the cache
        const Composition k = composition_of(word);
        const HPReal aim = std::min(tol, HPReal(ldexp(HPReal(1), -(current_bits() * 3) / 5)));
        try {
            out = (kernel == PathKernel::mpl) ? htmzv(k, HPReal(1), aim) : htmtv(k, HPReal(1), aim);
        } catch (const ToleranceNotReached& e) {
            if (e.best_error > tol) throw;
            out = {e.best_value, e.best_error, false};
        }
    } else {
        // shuffle with the letter 1 (whose regularised value is 0)
        const std::string rest = word.substr(1);
        std::size_t lead = 0;
        while (lead < rest.size() && rest[lead] == '1') ++lead;
        if (lead == rest.size()) {
            out = ValueWithBound::exact(HPReal(0));
        } else {
            out = ValueWithBound::exact(HPReal(0));
            const HPReal sub_tol = tol / static_cast<long>(rest.size() + 1);
            for (std::size_t p = lead + 1; p <= rest.size(); ++p) {
                std::string w = rest.substr(0, p) + "1" + rest.substr(p);
                out = out + regularized_constant(kernel, w, sub_tol);
            }
            out = (HPReal(-1) / static_cast<long>(lead + 1)) * out;
        }
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.values[key] = out;
    return out;
}

ValueWithBound path_near_one(PathKernel kernel, const Composition& k, const HPReal& s, const HPReal& tol) {
    const std::string w = word_of(k);
    ValueWithBound total = ValueWithBound::exact(HPReal(0));
    for (std::size_t p = 0; p <= w.size(); ++p) {
        HPReal near = regularized_near_zero(kernel, swapped(w.substr(0, p)), s);
        if (p % 2 == 1) near = -near;
        const HPReal scale = std::max(HPReal(1), HPReal(abs(near)));
        const ValueWithBound c =
            regularized_constant(kernel, w.substr(p), tol / (scale * static_cast<long>(4 * (w.size() + 1))));
        if (c.value == 0 && c.abs_error == 0) continue;
        total = total + ValueWithBound{near, abs(near) * epsilon() * 64, false} * c;
    }
    total.rigorous = false;
    return total;
}

}  // namespace hz
