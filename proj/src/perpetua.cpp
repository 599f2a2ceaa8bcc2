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
#include <perpetuants/linalg.hpp>
#include <perpetuants/perpetua.hpp>

namespace perpetuants
{

DimensionSeries stroh_series(std::size_t n, unsigned g_max)
{
    if (n == 0) {
        throw DomainError("stroh_series needs n >= 1");
    }
    DimensionSeries s;
    s.n = n;
    s.coefficients.assign(g_max + 1, 0);
    if (n == 1) {
        s.coefficients[0] = 1;
        return s;
    }
    if (n == 2) {
        for (unsigned g = 2; g <= g_max; g += 2) {
            s.coefficients[g] = 1;
        }
        return s;
    }
    const unsigned shift = threshold(n).weight();
    if (shift > g_max) {
        return s;
    }
    const DimensionSeries base = dim_series(n, g_max - shift);
    for (unsigned g = shift; g <= g_max; ++g) {
        s.coefficients[g] = base.coefficients[g - shift];
    }
    return s;
}

unsigned ThresholdVector::weight() const
{
    unsigned w = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        w += static_cast<unsigned>(i + 2) * k[i];
    }
    return w;
}

ThresholdVector threshold(std::size_t n)
{
    if (n < 3) {
        throw DomainError("the threshold vector is defined for n >= 3; degrees 1 and 2 are special cases");
    }
    if (n > 32) {
        throw DomainError("threshold weight overflows for n > 32");
    }
    ThresholdVector t;
    t.n = n;
    if (n == 3) {
        t.k = {0, 1};
    } else {
        // (0, 2^(n-4), 2^(n-5), ..., 2, 1, 1): entries for k2..kn.
        t.k.push_back(0);
        for (std::size_t e = n - 4 + 1; e-- > 0;) {
            t.k.push_back(1u << e);
        }
        t.k.push_back(1);
    }
    if (t.weight() != (1u << (n - 1)) - 1) {
        throw InternalError("threshold weight is not 2^(n-1)-1");
    }
    return t;
}

bool dominates(const std::vector<unsigned> &k, const std::vector<unsigned> &t)
{
    if (k.size() != t.size()) {
        throw DomainError("index length mismatch in dominance test");
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < t[i]) {
            return false;
        }
    }
    return true;
}

std::vector<InvariantElement> perpetuant_basis(std::size_t n, unsigned g,
                                               const std::optional<ThresholdVector> &override_threshold)
{
    const ThresholdVector t = override_threshold.value_or(threshold(n));
    if (t.n != n) {
        throw DomainError("threshold vector belongs to a different degree");
    }
    std::vector<InvariantElement> out;
    if (g < t.weight()) {
        return out;
    }
    for (auto &el : u_basis(n, g)) {
        if (dominates(el.k, t.k)) {
            out.push_back(std::move(el));
        }
    }
    return out;
}

Poly degree2_perpetuant(unsigned g)
{
    if (g == 0 || g % 2 != 0) {
        throw DomainError("degree-2 perpetuants exist only in even weight g >= 2 (odd weight gives 0)");
    }
    const unsigned h = g / 2;
    Poly out(Family::A);
    for (unsigned j = 0; j < h; ++j) {
        Poly term = Poly::variable(Family::A, j) * Poly::variable(Family::A, g - j);
        out += term * Rational(j % 2 == 0 ? 2 : -2);
    }
    out += Poly::variable(Family::A, h).pow(2) * Rational(h % 2 == 0 ? 1 : -1);
    return out;
}

std::vector<Poly> decomposable_span(std::size_t n, unsigned g)
{
    if (n < 2) {
        throw DomainError("decomposable_span needs n >= 2");
    }
    std::vector<Poly> out;
    for (std::size_t h = 1; h <= n / 2; ++h) {
        for (unsigned j = 0; j <= g; ++j) {
            const auto left = u_basis(h, j);
            if (left.empty()) {
                continue;
            }
            const auto right = u_basis(n - h, g - j);
            for (const auto &u : left) {
                for (const auto &v : right) {
                    out.push_back(u.value * v.value);
                }
            }
        }
    }
    return out;
}

bool ComplementCertificate::ok() const
{
    return direct_sum_ok && Integer(static_cast<unsigned long>(dim_perpetuant)) == stroh_coefficient;
}

ComplementCertificate verify_complement(std::size_t n, unsigned g,
                                        const std::optional<ThresholdVector> &override_threshold)
{
    if (n < 3) {
        throw DomainError("verify_complement needs n >= 3");
    }
    ComplementCertificate cert;
    cert.n = n;
    cert.g = g;

    const auto total = kernel_oracle(n, g);
    const auto dec = decomposable_span(n, g);
    const auto perp = values(perpetuant_basis(n, g, override_threshold));

    cert.dim_total = total.size();
    cert.dim_decomposable = poly_rank(dec);
    cert.dim_perpetuant = poly_rank(perp);

    std::vector<Poly> both = dec;
    both.insert(both.end(), perp.begin(), perp.end());
    cert.rank_union = poly_rank(both);

    std::vector<Poly> with_total = both;
    with_total.insert(with_total.end(), total.begin(), total.end());
    const bool inside = poly_rank(with_total) == cert.dim_total;

    cert.stroh_coefficient = stroh_series(n, g).at(g);
    cert.direct_sum_ok = inside && cert.dim_perpetuant == perp.size()
                         && cert.rank_union == cert.dim_decomposable + cert.dim_perpetuant
                         && cert.rank_union == cert.dim_total;
    return cert;
}

DecomposableSubsetReport decomposable_subset_report(std::size_t n, unsigned g)
{
    DecomposableSubsetReport r;
    const auto dec = decomposable_span(n, g);
    r.dim_decomposable = poly_rank(dec);
    std::vector<Poly> inside;
    for (const auto &el : u_basis(n, g)) {
        std::vector<Poly> probe = dec;
        probe.push_back(el.value);
        if (poly_rank(probe) == r.dim_decomposable) {
            inside.push_back(el.value);
        }
    }
    r.u_elements_in_dec = inside.size();
    r.spanned_by_u_subset = poly_rank(inside) == r.dim_decomposable;
    return r;
}

} // namespace perpetuants
