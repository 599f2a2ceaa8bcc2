/*
   Copyright 2026 The perpetuants authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <perpetuants/errors.hpp>
#include <perpetuants/symfunc.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace perpetuants
{

// Partition

Partition::Partition(std::vector<unsigned> parts)
{
    for (auto p : parts) {
        if (p != 0) {
            parts_.push_back(p);
        }
    }
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
        throw DomainError("partition parts must be weakly decreasing");
    }
}

unsigned Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::vector<unsigned> Partition::padded(std::size_t n) const
{
    if (parts_.size() > n) {
        throw DomainError("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
    }
    std::vector<unsigned> out = parts_;
    out.resize(n, 0);
    return out;
}

std::string Partition::to_string() const
{
    if (parts_.empty()) {
        return "0";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        os << (i ? "+" : "") << parts_[i];
    }
    return os.str();
}

std::string Partition::to_string(std::size_t n) const
{
    auto p = padded(n);
    if (p.empty()) {
        return "0";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        os << (i ? "+" : "") << p[i];
    }
    return os.str();
}

// EIndex

unsigned EIndex::weight() const
{
    unsigned w = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        w += static_cast<unsigned>(i + 1) * k[i];
    }
    return w;
}

Partition EIndex::leading_partition() const
{
    std::vector<unsigned> parts(k.size(), 0);
    unsigned tail = 0;
    for (std::size_t i = k.size(); i-- > 0;) {
        tail += k[i];
        parts[i] = tail;
    }
    return Partition(parts);
}

std::string EIndex::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < k.size(); ++i) {
        os << (i ? "," : "") << k[i];
    }
    os << ')';
    return os.str();
}

// Enumeration

namespace
{

void partitions_rec(unsigned remaining, unsigned max_part, unsigned min_part, std::size_t slots,
                    std::vector<unsigned> &cur, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0) {
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= min_part && p > 0; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, min_part, slots - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(unsigned g, std::size_t max_parts, unsigned min_part)
{
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    partitions_rec(g, g, std::max(min_part, 1u), max_parts, cur, out);
    return out;
}

std::vector<Partition> partitions_with_parts_in(unsigned g, unsigned lo, unsigned hi)
{
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    if (hi == 0 || lo > hi) {
        if (g == 0) {
            out.emplace_back();
        }
        return out;
    }
    partitions_rec(g, hi, std::max(lo, 1u), g + 1, cur, out);
    return out;
}

std::vector<EIndex> e_indices(std::size_t n, unsigned g)
{
    // Each partition with at most n parts is the leading partition of exactly one EIndex:
    // k_i = h_i - h_{i+1}.
    std::vector<EIndex> out;
    for (const auto &h : partitions(g, n)) {
        auto hp = h.padded(n);
        EIndex k{std::vector<unsigned>(n, 0)};
        for (std::size_t i = 0; i < n; ++i) {
            k.k[i] = hp[i] - (i + 1 < n ? hp[i + 1] : 0u);
        }
        out.push_back(std::move(k));
    }
    return out;
}

// Symmetric polynomials

Poly monomial_sum(const Partition &h, std::size_t n)
{
    auto exps = h.padded(n);
    std::sort(exps.begin(), exps.end());
    Poly out(Family::L);
    do {
        std::vector<std::uint32_t> dense(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            dense[i + 1] = exps[i];
        }
        out.add_term(ExponentVector(std::move(dense)), 1);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

namespace
{

void for_each_subset(std::size_t n, std::size_t size, const std::function<void(const std::vector<std::size_t> &)> &f)
{
    // Lexicographic order of 1-based subsets.
    if (size > n) {
        return;
    }
    std::vector<std::size_t> cur(size);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        f(cur);
        std::size_t i = size;
        while (i > 0 && cur[i - 1] == n - size + i) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++cur[i - 1];
        for (std::size_t j = i; j < size; ++j) {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

} // namespace

Poly elementary(std::size_t i, std::size_t n)
{
    Poly out(Family::L);
    if (i == 0) {
        return Poly::constant(Family::L, 1);
    }
    for_each_subset(n, i, [&](const std::vector<std::size_t> &s) {
        std::vector<std::uint32_t> dense(n + 1, 0);
        for (auto j : s) {
            dense[j] = 1;
        }
        out.add_term(ExponentVector(std::move(dense)), 1);
    });
    return out;
}

Poly e_monomial(const EIndex &k, std::size_t n)
{
    if (k.size() > n) {
        throw DomainError("EIndex " + k.to_string() + " is longer than the variable count");
    }
    Poly out = Poly::constant(Family::L, 1);
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k.k[i] != 0) {
            out *= elementary(i + 1, n).pow(k.k[i]);
        }
    }
    return out;
}

TransitionMatrix transition_beta(std::size_t n, unsigned g)
{
    if (n == 0) {
        throw DomainError("transition matrices need at least one variable");
    }
    TransitionMatrix t;
    t.direction = TransitionDirection::Beta;
    t.n = n;
    t.g = g;
    t.partitions = partitions(g, n);
    t.eindices = e_indices(n, g);
    const std::size_t dim = t.partitions.size();
    t.entries.assign(dim, std::vector<Integer>(dim, 0));
    for (std::size_t col = 0; col < dim; ++col) {
        const Poly e = e_monomial(t.eindices[col], n);
        for (std::size_t row = 0; row < dim; ++row) {
            auto hp = t.partitions[row].padded(n);
            std::vector<std::uint32_t> dense(n + 1, 0);
            std::copy(hp.begin(), hp.end(), dense.begin() + 1);
            const Rational c = e.coefficient(ExponentVector(std::move(dense)));
            if (c.get_den() != 1) {
                throw InternalError("non-integer coefficient in an e-monomial");
            }
            t.entries[row][col] = c.get_num();
        }
    }
    return t;
}

namespace
{

struct TransitionCache {
    std::shared_mutex mutex;
    std::map<std::pair<std::size_t, unsigned>, TransitionMatrix> alpha;
    std::atomic<bool> enabled{true};
};

TransitionCache &cache()
{
    static TransitionCache c;
    return c;
}

TransitionMatrix compute_alpha(std::size_t n, unsigned g)
{
    TransitionMatrix beta = transition_beta(n, g);
    TransitionMatrix t;
    t.direction = TransitionDirection::Alpha;
    t.n = n;
    t.g = g;
    t.partitions = std::move(beta.partitions);
    t.eindices = std::move(beta.eindices);
    t.entries = integer_inverse(beta.entries);
    return t;
}

} // namespace

TransitionMatrix transition_alpha(std::size_t n, unsigned g)
{
    auto &c = cache();
    if (!c.enabled.load()) {
        return compute_alpha(n, g);
    }
    const auto key = std::make_pair(n, g);
    {
        std::shared_lock lock(c.mutex);
        auto it = c.alpha.find(key);
        if (it != c.alpha.end()) {
            return it->second;
        }
    }
    TransitionMatrix t = compute_alpha(n, g);
    std::unique_lock lock(c.mutex);
    return c.alpha.try_emplace(key, std::move(t)).first->second;
}

void set_transition_cache_enabled(bool enabled)
{
    cache().enabled.store(enabled);
}

void clear_transition_cache()
{
    auto &c = cache();
    std::unique_lock lock(c.mutex);
    c.alpha.clear();
}

// Reduction modulo L1 + ... + Ln

Poly bar_reduce(const Poly &p, std::size_t n)
{
    if (p.family() != Family::L) {
        throw FamilyMismatchError("bar_reduce expects a lambda polynomial");
    }
    if (p.extent() > n + 1) {
        throw DomainError("polynomial uses lambda variables beyond L" + std::to_string(n));
    }
    Poly repl(Family::L);
    for (std::size_t i = 1; i < n; ++i) {
        repl -= Poly::variable(Family::L, i);
    }
    return substitute(p, n, repl);
}

Poly reduced_linear_form(const std::vector<std::size_t> &subset, std::size_t n)
{
    Poly out(Family::L);
    for (auto i : subset) {
        if (i == 0 || i > n) {
            throw DomainError("subset index out of range");
        }
        if (i < n) {
            out += Poly::variable(Family::L, i);
        } else {
            for (std::size_t j = 1; j < n; ++j) {
                out -= Poly::variable(Family::L, j);
            }
        }
    }
    return out;
}

Poly p_h(std::size_t n, std::size_t h)
{
    if (h < 1 || 2 * h > n) {
        throw DomainError("p_h requires 1 <= h <= n/2 (got n=" + std::to_string(n) + ", h=" + std::to_string(h) + ")");
    }
    const bool half = 2 * h == n;
    Poly out = Poly::constant(Family::L, 1);
    for_each_subset(n, h, [&](const std::vector<std::size_t> &s) {
        if (half && s.front() != 1) {
            return;
        }
        out *= reduced_linear_form(s, n);
    });
    return out;
}

Poly q_n(std::size_t n)
{
    if (n < 3) {
        throw DomainError("q_n is defined for n >= 3; degrees 1 and 2 are handled separately");
    }
    Poly out = Poly::constant(Family::L, 1);
    for (std::size_t h = 1; h <= n / 2; ++h) {
        out *= p_h(n, h);
    }
    return out;
}

LeadingMonomial leading_monomial(const Poly &p)
{
    if (p.is_zero()) {
        throw DomainError("the zero polynomial has no leading exponent");
    }
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
        if (lex_less(best->first, it->first)) {
            best = it;
        }
    }
    return {best->first, best->second};
}

ExponentVector leading_exponent(const Poly &p)
{
    return leading_monomial(p).exponent;
}

std::vector<std::uint32_t> lambda_exponents(const ExponentVector &e, std::size_t len)
{
    return e.window(1, len);
}

} // namespace perpetuants
