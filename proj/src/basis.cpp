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

#include <perpetuants/basis.hpp>
#include <perpetuants/errors.hpp>
#include <perpetuants/linalg.hpp>
#include <perpetuants/umbral.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace perpetuants
{

std::vector<InvariantElement> u_basis(std::size_t n, unsigned g, Normalization norm)
{
    if (n == 0) {
        throw DomainError("u_basis needs n >= 1");
    }
    const TransitionMatrix alpha = transition_alpha(n, g);
    std::vector<Poly> a_mons;
    a_mons.reserve(alpha.partitions.size());
    for (const auto &h : alpha.partitions) {
        a_mons.push_back(a_monomial(h, n));
    }
    std::vector<InvariantElement> out;
    for (std::size_t row = 0; row < alpha.eindices.size(); ++row) {
        const auto &k = alpha.eindices[row].k;
        if (k[0] != 0) {
            continue;
        }
        InvariantElement el;
        el.n = n;
        el.g = g;
        el.k.assign(k.begin() + 1, k.end());
        for (std::size_t col = 0; col < a_mons.size(); ++col) {
            const Integer &c = alpha.entries[row][col];
            if (c != 0) {
                el.value += a_mons[col] * Rational(c);
            }
        }
        if (norm == Normalization::Primitive) {
            el.value = el.value.primitive_part();
        }
        out.push_back(std::move(el));
    }
    return out;
}

std::vector<ExponentVector> a_monomials(std::size_t n, unsigned g, std::optional<std::size_t> max_index)
{
    // Nondecreasing index sequences i_1 <= ... <= i_n with sum g.
    std::vector<ExponentVector> out;
    std::vector<std::uint32_t> counts(g + 1, 0);
    const std::size_t top = std::min<std::size_t>(g, max_index.value_or(g));
    std::function<void(std::size_t, std::size_t, unsigned)> rec = [&](std::size_t slots, std::size_t lo,
                                                                      unsigned remaining) {
        if (slots == 0) {
            if (remaining == 0) {
                out.emplace_back(counts);
            }
            return;
        }
        for (std::size_t i = lo; i <= top && i * slots <= remaining; ++i) {
            ++counts[i];
            rec(slots - 1, i, remaining - static_cast<unsigned>(i));
            --counts[i];
        }
    };
    rec(n, 0, g);
    std::sort(out.begin(), out.end(), CanonicalTermOrder{});
    return out;
}

std::vector<Poly> kernel_oracle(std::size_t n, unsigned g, std::optional<std::size_t> max_index)
{
    const auto source = a_monomials(n, g, max_index);
    std::vector<ExponentVector> target;
    if (g > 0) {
        target = a_monomials(n, g - 1, max_index);
    }
    std::map<ExponentVector, std::size_t, CanonicalTermOrder> row_of;
    for (std::size_t i = 0; i < target.size(); ++i) {
        row_of.emplace(target[i], i);
    }
    IntMatrix m(target.size(), std::vector<Integer>(source.size(), 0));
    for (std::size_t col = 0; col < source.size(); ++col) {
        // D(a^e) = sum over i >= 1 of e_i * a^(e - d_i + d_{i-1}).
        const auto &e = source[col];
        for (const auto &[i, x] : e.entries()) {
            if (i == 0) {
                continue;
            }
            ExponentVector d = e.with(i, x - 1);
            d = d.with(i - 1, d[i - 1] + 1);
            m[row_of.at(d)][col] += x;
        }
    }
    std::vector<Poly> out;
    for (const auto &v : nullspace(m, source.size())) {
        Poly p(Family::A);
        for (std::size_t j = 0; j < v.size(); ++j) {
            p.add_term(source[j], Rational(v[j]));
        }
        out.push_back(std::move(p));
    }
    return out;
}

DimensionSeries dim_series(std::size_t n, unsigned g_max)
{
    if (n == 0) {
        throw DomainError("dim_series needs n >= 1");
    }
    DimensionSeries s;
    s.n = n;
    s.coefficients.assign(g_max + 1, 0);
    s.coefficients[0] = 1;
    // Divide by (1 - x^i) for each i = 2..n.
    for (std::size_t i = 2; i <= n; ++i) {
        for (std::size_t g = i; g <= g_max; ++g) {
            s.coefficients[g] += s.coefficients[g - i];
        }
    }
    for (unsigned g = 0; g <= g_max; ++g) {
        if (s.coefficients[g] != dimension_by_partitions(n, g)) {
            throw InternalError("dimension series disagrees with the partition count at g=" + std::to_string(g));
        }
    }
    return s;
}

Integer dimension_by_partitions(std::size_t n, unsigned g)
{
    if (n < 2) {
        return g == 0 ? 1 : 0;
    }
    return static_cast<unsigned long>(partitions_with_parts_in(g, 2, static_cast<unsigned>(n)).size());
}

namespace
{

void require_common_bidegree(std::span<const Poly> a, std::span<const Poly> b)
{
    std::optional<BiDegree> common;
    auto check = [&](const Poly &p) {
        if (p.is_zero()) {
            return;
        }
        if (p.family() != Family::A) {
            throw FamilyMismatchError("span comparison expects a-polynomials");
        }
        BiDegree bd = bidegree(p);
        if (!common) {
            common = bd;
        } else if (!(*common == bd)) {
            throw InhomogeneousError("span comparison across different bidegrees",
                                     "(" + std::to_string(common->degree) + "," + std::to_string(common->weight) + ")",
                                     "(" + std::to_string(bd.degree) + "," + std::to_string(bd.weight) + ")");
        }
    };
    for (const auto &p : a) {
        check(p);
    }
    for (const auto &p : b) {
        check(p);
    }
}

} // namespace

SpanReport span_equal(std::span<const Poly> a, std::span<const Poly> b)
{
    require_common_bidegree(a, b);
    SpanReport r;
    r.rank_a = poly_rank(a);
    r.rank_b = poly_rank(b);
    std::vector<Poly> both(a.begin(), a.end());
    both.insert(both.end(), b.begin(), b.end());
    r.rank_union = poly_rank(both);
    r.equal = r.rank_a == r.rank_b && r.rank_a == r.rank_union;
    return r;
}

bool in_span(const Poly &p, std::span<const Poly> space)
{
    std::vector<Poly> both(space.begin(), space.end());
    const auto base = poly_rank(both);
    both.push_back(p);
    return poly_rank(both) == base;
}

std::vector<Poly> values(const std::vector<InvariantElement> &elements)
{
    std::vector<Poly> out;
    out.reserve(elements.size());
    for (const auto &e : elements) {
        out.push_back(e.value);
    }
    return out;
}

} // namespace perpetuants
