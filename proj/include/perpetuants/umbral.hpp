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

#ifndef PERPETUANTS_UMBRAL_HPP
#define PERPETUANTS_UMBRAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <perpetuants/poly.hpp>
#include <perpetuants/symfunc.hpp>

namespace perpetuants
{

/// alpha_1^[r_1] ... alpha_n^[r_n] in divided powers; the ambient count is r.size().
struct UmbralMonomial {
    std::vector<unsigned> r;

    friend auto operator<=>(const UmbralMonomial &, const UmbralMonomial &) = default;
};

/// Linear combination of umbral monomials over a fixed number of umbrae.
class UmbralPoly
{
public:
    explicit UmbralPoly(std::size_t umbrae) : umbrae_(umbrae) {}

    std::size_t umbrae() const
    {
        return umbrae_;
    }
    const std::map<UmbralMonomial, Rational> &terms() const
    {
        return terms_;
    }
    void add_term(const UmbralMonomial &m, const Rational &c);

    /// d/d alpha_i in divided-power semantics: alpha^[r] -> alpha^[r-1]. Index is 0-based.
    UmbralPoly derivative(std::size_t i) const;
    /// Sum of the derivatives over all umbrae.
    UmbralPoly total_derivative() const;

    /// Product of this polynomial on umbrae 1..n with `other` placed on umbrae n+1..n+m.
    UmbralPoly disjoint_product(const UmbralPoly &other) const;

private:
    std::size_t umbrae_;
    std::map<UmbralMonomial, Rational> terms_;
};

/// E(alpha^[r]) = a_{r_1} ... a_{r_n}; unused umbrae contribute a0.
Poly umbral_E(const UmbralMonomial &m);
Poly umbral_E(const UmbralPoly &u);

/// Cayley's derivation: sum over i >= 1 of a_{i-1} d/da_i.
Poly derivation_D(const Poly &p);

/// Polynomial in a formal parameter t with a-polynomial coefficients.
struct TranslatedPoly {
    /// coeffs[j] multiplies t^j; trailing zero coefficients are trimmed.
    std::vector<Poly> coeffs;

    const Poly &coefficient(std::size_t j) const;
    bool is_constant() const
    {
        return coeffs.size() <= 1;
    }
    std::string to_string() const;
};

/// Substitute a_k -> sum_{j<=k} a_j t^(k-j)/(k-j)! and expand.
TranslatedPoly translate(const Poly &p);

/// Polynomial in lambda with a-polynomial coefficients: the tensor in which the
/// potenziante lives. Keys are lambda exponents.
class LambdaAPoly
{
public:
    using TermMap = std::map<ExponentVector, Poly, CanonicalTermOrder>;

    const TermMap &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    void add_term(const ExponentVector &lambda, const Poly &coeff);

    /// Sum over lambda terms of (lambda-poly term) * coefficient.
    static LambdaAPoly tensor(const Poly &lambda_part, const Poly &a_part);

    LambdaAPoly &operator+=(const LambdaAPoly &other);
    friend LambdaAPoly operator*(const LambdaAPoly &x, const LambdaAPoly &y);
    /// Multiply by a pure lambda polynomial.
    LambdaAPoly times_lambda(const Poly &lambda_poly) const;
    /// Apply D to every a-coefficient.
    LambdaAPoly apply_D() const;
    /// Rename L_i to L_{i+offset}.
    LambdaAPoly shift_lambda(std::size_t offset) const;

    friend bool operator==(const LambdaAPoly &, const LambdaAPoly &) = default;

private:
    TermMap terms_;
};

/// pi_{n,g} computed straight from the multinomial expansion:
/// the sum over compositions r of g into n parts of L^r a_{r1} ... a_{rn}.
LambdaAPoly potenziante_direct(std::size_t n, unsigned g);

struct PotenziantRow {
    Partition h;
    Poly m;        // m_h in L1..Ln
    Poly a_monomial; // a_{h1} ... a_{hn}
};

struct PotenziantERow {
    EIndex k;
    Poly u; // tilde U_k
};

struct PotenziantExpansion {
    std::size_t n = 0;
    unsigned g = 0;
    std::vector<PotenziantRow> rows;
    std::vector<PotenziantERow> e_rows;

    /// Sum of m_h (x) a_h.
    LambdaAPoly from_rows() const;
    /// Sum of e^k (x) tilde U_k.
    LambdaAPoly from_e_rows() const;
    /// "m_{3,0,0}*a0^2*a3 + m_{2,1,0}*a0*a1*a2 + m_{1,1,1}*a1^3".
    std::string rows_text() const;
};

/// a_{h1} ... a_{hn} for h padded with zeros to n entries.
Poly a_monomial(const Partition &h, std::size_t n);

PotenziantExpansion potenziante(std::size_t n, unsigned g);

} // namespace perpetuants

#endif
