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
#include <perpetuants/umbral.hpp>

#include <functional>
#include <sstream>

namespace perpetuants
{

// UmbralPoly

void UmbralPoly::add_term(const UmbralMonomial &m, const Rational &c)
{
    if (m.r.size() != umbrae_) {
        throw DomainError("umbral monomial has the wrong number of umbrae");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

UmbralPoly UmbralPoly::derivative(std::size_t i) const
{
    UmbralPoly out(umbrae_);
    for (const auto &[m, c] : terms_) {
        if (m.r.at(i) == 0) {
            continue;
        }
        UmbralMonomial d = m;
        --d.r[i];
        out.add_term(d, c);
    }
    return out;
}

UmbralPoly UmbralPoly::total_derivative() const
{
    UmbralPoly out(umbrae_);
    for (std::size_t i = 0; i < umbrae_; ++i) {
        UmbralPoly di = derivative(i);
        for (const auto &[m, c] : di.terms()) {
            out.add_term(m, c);
        }
    }
    return out;
}

UmbralPoly UmbralPoly::disjoint_product(const UmbralPoly &other) const
{
    UmbralPoly out(umbrae_ + other.umbrae_);
    for (const auto &[m1, c1] : terms_) {
        for (const auto &[m2, c2] : other.terms_) {
            UmbralMonomial m = m1;
            m.r.insert(m.r.end(), m2.r.begin(), m2.r.end());
            out.add_term(m, c1 * c2);
        }
    }
    return out;
}

Poly umbral_E(const UmbralMonomial &m)
{
    std::vector<std::uint32_t> dense;
    for (auto r : m.r) {
        if (dense.size() <= r) {
            dense.resize(r + 1, 0);
        }
        ++dense[r];
    }
    return Poly::monomial(Family::A, ExponentVector(std::move(dense)));
}

Poly umbral_E(const UmbralPoly &u)
{
    Poly out(Family::A);
    for (const auto &[m, c] : u.terms()) {
        out += umbral_E(m) * c;
    }
    return out;
}

Poly derivation_D(const Poly &p)
{
    if (p.family() != Family::A) {
        throw FamilyMismatchError("D acts on a-polynomials");
    }
    Poly out(Family::A);
    for (const auto &[e, c] : p.terms()) {
        for (const auto &[i, x] : e.entries()) {
            if (i == 0) {
                continue;
            }
            ExponentVector d = e.with(i, x - 1);
            d = d.with(i - 1, d[i - 1] + 1);
            out.add_term(d, c * x);
        }
    }
    return out;
}

// Translation

const Poly &TranslatedPoly::coefficient(std::size_t j) const
{
    static const Poly zero(Family::A);
    return j < coeffs.size() ? coeffs[j] : zero;
}

std::string TranslatedPoly::to_string() const
{
    if (coeffs.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) {
            continue;
        }
        os << (first ? "" : " + ") << '(' << coeffs[j].to_string() << ')';
        if (j == 1) {
            os << "*t";
        } else if (j > 1) {
            os << "*t^" << j;
        }
        first = false;
    }
    return os.str();
}

namespace
{

using TSeries = std::vector<Poly>;

void trim(TSeries &s)
{
    while (!s.empty() && s.back().is_zero()) {
        s.pop_back();
    }
}

TSeries multiply(const TSeries &x, const TSeries &y)
{
    if (x.empty() || y.empty()) {
        return {};
    }
    TSeries out(x.size() + y.size() - 1, Poly(Family::A));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    trim(out);
    return out;
}

// Image of a_k: sum over j of a_j t^(k-j)/(k-j)!.
TSeries translated_variable(std::size_t k)
{
    TSeries out(k + 1, Poly(Family::A));
    Integer fact = 1;
    for (std::size_t d = 0; d <= k; ++d) {
        if (d > 0) {
            fact *= static_cast<unsigned long>(d);
        }
        out[d] = Poly::variable(Family::A, k - d) * make_rational(1, fact);
    }
    return out;
}

} // namespace

TranslatedPoly translate(const Poly &p)
{
    if (p.family() != Family::A) {
        throw FamilyMismatchError("translate acts on a-polynomials");
    }
    std::vector<TSeries> images;
    TSeries total;
    for (const auto &[e, c] : p.terms()) {
        TSeries term{Poly::constant(Family::A, c)};
        for (const auto &[i, x] : e.entries()) {
            while (images.size() <= i) {
                images.push_back(translated_variable(images.size()));
            }
            for (std::uint32_t r = 0; r < x; ++r) {
                term = multiply(term, images[i]);
            }
        }
        if (total.size() < term.size()) {
            total.resize(term.size(), Poly(Family::A));
        }
        for (std::size_t j = 0; j < term.size(); ++j) {
            total[j] += term[j];
        }
    }
    trim(total);
    return TranslatedPoly{std::move(total)};
}

// LambdaAPoly

void LambdaAPoly::add_term(const ExponentVector &lambda, const Poly &coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

LambdaAPoly LambdaAPoly::tensor(const Poly &lambda_part, const Poly &a_part)
{
    if (lambda_part.family() != Family::L || a_part.family() != Family::A) {
        throw FamilyMismatchError("tensor expects a lambda polynomial and an a-polynomial");
    }
    LambdaAPoly out;
    for (const auto &[e, c] : lambda_part.terms()) {
        out.add_term(e, a_part * c);
    }
    return out;
}

LambdaAPoly &LambdaAPoly::operator+=(const LambdaAPoly &other)
{
    for (const auto &[e, p] : other.terms_) {
        add_term(e, p);
    }
    return *this;
}

LambdaAPoly operator*(const LambdaAPoly &x, const LambdaAPoly &y)
{
    LambdaAPoly out;
    for (const auto &[ex, px] : x.terms_) {
        for (const auto &[ey, py] : y.terms_) {
            out.add_term(ex + ey, px * py);
        }
    }
    return out;
}

LambdaAPoly LambdaAPoly::times_lambda(const Poly &lambda_poly) const
{
    LambdaAPoly out;
    for (const auto &[el, c] : lambda_poly.terms()) {
        for (const auto &[e, p] : terms_) {
            out.add_term(el + e, p * c);
        }
    }
    return out;
}

LambdaAPoly LambdaAPoly::apply_D() const
{
    LambdaAPoly out;
    for (const auto &[e, p] : terms_) {
        out.add_term(e, derivation_D(p));
    }
    return out;
}

LambdaAPoly LambdaAPoly::shift_lambda(std::size_t offset) const
{
    LambdaAPoly out;
    for (const auto &[e, p] : terms_) {
        std::vector<std::uint32_t> dense(e.extent() + offset, 0);
        for (const auto &[i, x] : e.entries()) {
            dense[i + offset] = x;
        }
        out.add_term(ExponentVector(std::move(dense)), p);
    }
    return out;
}

// Potenziante

LambdaAPoly potenziante_direct(std::size_t n, unsigned g)
{
    LambdaAPoly out;
    std::vector<unsigned> r(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned remaining) {
        if (i + 1 == n) {
            r[i] = remaining;
            std::vector<std::uint32_t> lam(n + 1, 0);
            for (std::size_t j = 0; j < n; ++j) {
                lam[j + 1] = r[j];
            }
            out.add_term(ExponentVector(std::move(lam)), umbral_E(UmbralMonomial{r}));
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            r[i] = v;
            rec(i + 1, remaining - v);
        }
    };
    if (n == 0) {
        if (g == 0) {
            out.add_term(ExponentVector{}, Poly::constant(Family::A, 1));
        }
        return out;
    }
    rec(0, g);
    return out;
}

Poly a_monomial(const Partition &h, std::size_t n)
{
    auto hp = h.padded(n);
    return umbral_E(UmbralMonomial{hp});
}

PotenziantExpansion potenziante(std::size_t n, unsigned g)
{
    if (n == 0) {
        throw DomainError("potenziante needs n >= 1");
    }
    PotenziantExpansion out;
    out.n = n;
    out.g = g;
    const TransitionMatrix alpha = transition_alpha(n, g);
    for (const auto &h : alpha.partitions) {
        out.rows.push_back({h, monomial_sum(h, n), a_monomial(h, n)});
    }
    for (std::size_t row = 0; row < alpha.eindices.size(); ++row) {
        Poly u(Family::A);
        for (std::size_t col = 0; col < alpha.partitions.size(); ++col) {
            const Integer &c = alpha.entries[row][col];
            if (c != 0) {
                u += out.rows[col].a_monomial * Rational(c);
            }
        }
        out.e_rows.push_back({alpha.eindices[row], std::move(u)});
    }
    return out;
}

LambdaAPoly PotenziantExpansion::from_rows() const
{
    LambdaAPoly out;
    for (const auto &row : rows) {
        out += LambdaAPoly::tensor(row.m, row.a_monomial);
    }
    return out;
}

LambdaAPoly PotenziantExpansion::from_e_rows() const
{
    LambdaAPoly out;
    for (const auto &row : e_rows) {
        out += LambdaAPoly::tensor(e_monomial(row.k, n), row.u);
    }
    return out;
}

std::string PotenziantExpansion::rows_text() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? " + " : "") << "m_{";
        auto hp = rows[i].h.padded(n);
        for (std::size_t j = 0; j < hp.size(); ++j) {
            os << (j ? "," : "") << hp[j];
        }
        os << "}*" << rows[i].a_monomial.to_string();
    }
    return os.str();
}

} // namespace perpetuants
