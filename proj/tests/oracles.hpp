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

// Test-only reference computations. Each one is deliberately naive and shares no
// code path with the library routine it checks.
#ifndef PERPETUANTS_TESTS_ORACLES_HPP
#define PERPETUANTS_TESTS_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <perpetuants/poly.hpp>

namespace oracle
{

using perpetuants::ExponentVector;
using perpetuants::Family;
using perpetuants::Integer;
using perpetuants::Poly;
using perpetuants::Rational;

// Number of (k2, ..., kn) >= 0 with sum i*k_i = g, by nested enumeration.
inline long count_weight_vectors(std::size_t n, unsigned g, const std::vector<unsigned> &floor = {})
{
    long count = 0;
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i > n) {
            if (left == 0)
                ++count;
            return;
        }
        unsigned lo = floor.size() > i - 2 ? floor[i - 2] : 0u;
        for (long k = lo; static_cast<long>(i) * k <= left; ++k)
            rec(i + 1, left - static_cast<long>(i) * k);
    };
    if (n < 2)
        return g == 0 ? 1 : 0;
    rec(2, g);
    return count;
}

// prod_{i=2..n} (1 + x^i + x^{2i} + ...) truncated at g_max, by plain convolution.
inline std::vector<Integer> geometric_product(std::size_t n, unsigned g_max, unsigned shift = 0)
{
    std::vector<Integer> acc(g_max + 1, 0);
    if (shift <= g_max)
        acc[shift] = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        std::vector<Integer> next(g_max + 1, 0);
        for (unsigned a = 0; a <= g_max; ++a)
            for (unsigned b = 0; a + b <= g_max; b += static_cast<unsigned>(i))
                next[a + b] += acc[a];
        acc = next;
    }
    return acc;
}

// Coefficient of L^h in e1^k1 ... en^kn, counting one subset choice per factor.
inline long beta_entry(const std::vector<unsigned> &h, const std::vector<unsigned> &k)
{
    std::size_t n = h.size();
    std::vector<std::size_t> factors;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (unsigned r = 0; r < k[i]; ++r)
            factors.push_back(i + 1);
    std::vector<unsigned> cur(n, 0);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t f) {
        for (std::size_t j = 0; j < n; ++j)
            if (cur[j] > h[j])
                return;
        if (f == factors.size()) {
            if (cur == h)
                ++count;
            return;
        }
        std::size_t size = factors[f];
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != size)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1u << j))
                    ++cur[j];
            rec(f + 1);
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1u << j))
                    --cur[j];
        }
    };
    rec(0);
    return count;
}

inline Rational evaluate(const Poly &p, const std::vector<Rational> &point)
{
    Rational total = 0;
    for (const auto &[e, c] : p.terms()) {
        Rational term = c;
        for (auto [idx, exp] : e.entries())
            for (std::uint32_t r = 0; r < exp; ++r)
                term *= point.at(idx);
        total += term;
    }
    return total;
}

// a'_k = sum_{j<=k} a_j t^{k-j}/(k-j)! evaluated numerically.
inline std::vector<Rational> translated_point(const std::vector<Rational> &a, const Rational &t)
{
    std::vector<Rational> out(a.size(), 0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        Rational power = 1;
        Integer fact = 1;
        for (std::size_t d = 0; d <= k; ++d) {
            if (d > 0) {
                power *= t;
                fact *= static_cast<unsigned long>(d);
            }
            out[k] += a[k - d] * power / Rational(fact);
        }
    }
    return out;
}

// p(a) == p(t . a) at `trials` random rational points.
inline bool numerically_translation_invariant(const Poly &p, std::mt19937 &rng, int trials = 3)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::size_t extent = p.extent();
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Rational> a(extent);
        for (auto &x : a)
            x = perpetuants::make_rational(num(rng), den(rng));
        Rational t = perpetuants::make_rational(num(rng), den(rng));
        if (evaluate(p, a) != evaluate(p, translated_point(a, t)))
            return false;
    }
    return true;
}

inline Poly random_poly(std::mt19937 &rng, Family family = Family::A, int max_terms = 5,
                        std::size_t max_index = 4, unsigned max_exp = 3)
{
    std::uniform_int_distribution<int> terms(0, max_terms), coef(-6, 6), den(1, 3);
    std::uniform_int_distribution<std::size_t> index(family == Family::L ? 1 : 0, max_index);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    Poly p(family);
    int count = terms(rng);
    for (int i = 0; i < count; ++i) {
        std::vector<std::uint32_t> dense(max_index + 1, 0);
        int vars = 1 + static_cast<int>(exp(rng) % 3);
        for (int v = 0; v < vars; ++v)
            dense[index(rng)] += exp(rng);
        p.add_term(ExponentVector(dense), perpetuants::make_rational(coef(rng), den(rng)));
    }
    return p;
}

} // namespace oracle

#endif
