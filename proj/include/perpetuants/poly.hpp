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

#ifndef PERPETUANTS_POLY_HPP
#define PERPETUANTS_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace perpetuants
{

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms.
inline Rational make_rational(const Integer &num, const Integer &den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Variable family of a polynomial. A: coefficients a0, a1, ... of a binary form.
/// L: the lambda variables L1, L2, ... (index 0 is never used).
enum class Family { A, L };

const char *family_name(Family f);

/// Exponents of a monomial, stored densely by variable index with trailing zeros trimmed.
class ExponentVector
{
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<std::uint32_t> dense);
    ExponentVector(std::initializer_list<std::uint32_t> dense);

    static ExponentVector single(std::size_t index, std::uint32_t exponent = 1);

    std::uint32_t operator[](std::size_t index) const
    {
        return index < exps_.size() ? exps_[index] : 0u;
    }

    /// One past the largest index with a nonzero exponent.
    std::size_t extent() const
    {
        return exps_.size();
    }
    bool empty() const
    {
        return exps_.empty();
    }
    const std::vector<std::uint32_t> &dense() const
    {
        return exps_;
    }
    /// Dense copy padded or truncated to exactly `len` entries starting at index `from`.
    std::vector<std::uint32_t> window(std::size_t from, std::size_t len) const;

    /// (index, exponent) pairs with nonzero exponent, ascending index.
    std::vector<std::pair<std::size_t, std::uint32_t>> entries() const;

    std::uint64_t degree() const;
    /// Sum of index * exponent.
    std::uint64_t weight() const;

    ExponentVector with(std::size_t index, std::uint32_t exponent) const;
    bool divides(const ExponentVector &other) const;

    ExponentVector operator+(const ExponentVector &other) const;
    /// `other` must divide *this.
    ExponentVector operator-(const ExponentVector &other) const;

    friend bool operator==(const ExponentVector &, const ExponentVector &) = default;

private:
    void trim();
    std::vector<std::uint32_t> exps_;
};

/// Plain lexicographic order: a < b iff a_k < b_k at the first differing index.
bool lex_less(const ExponentVector &a, const ExponentVector &b);

/// Componentwise order: a <= b iff a_i <= b_i for all i.
bool dominated_by(const ExponentVector &a, const ExponentVector &b);

/// Canonical term order: "a comes before b". Higher total degree first, then
/// larger exponent of the lowest-indexed variable first.
struct CanonicalTermOrder {
    bool operator()(const ExponentVector &a, const ExponentVector &b) const;
};

struct BiDegree {
    std::uint64_t degree = 0;
    std::uint64_t weight = 0;

    friend bool operator==(const BiDegree &, const BiDegree &) = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Poly
{
public:
    using TermMap = std::map<ExponentVector, Rational, CanonicalTermOrder>;

    explicit Poly(Family family = Family::A) : family_(family) {}

    static Poly constant(Family family, const Rational &c);
    static Poly variable(Family family, std::size_t index);
    static Poly monomial(Family family, const ExponentVector &e, const Rational &c = 1);

    Family family() const
    {
        return family_;
    }
    const TermMap &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    std::size_t size() const
    {
        return terms_.size();
    }

    Rational coefficient(const ExponentVector &e) const;
    /// Accumulate c * x^e; drops the term when it cancels.
    void add_term(const ExponentVector &e, const Rational &c);

    /// Largest index of a variable that actually occurs, plus one.
    std::size_t extent() const;
    std::uint64_t total_degree() const;

    Poly &operator+=(const Poly &other);
    Poly &operator-=(const Poly &other);
    Poly &operator*=(const Poly &other);
    Poly &operator*=(const Rational &c);

    friend Poly operator+(Poly a, const Poly &b)
    {
        return a += b;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        return a -= b;
    }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const Rational &c)
    {
        return a *= c;
    }
    friend Poly operator*(const Rational &c, Poly a)
    {
        return a *= c;
    }
    Poly operator-() const;

    Poly pow(unsigned e) const;

    /// Exact division by a monomial; throws InternalError when some term is not divisible.
    Poly divide_by_monomial(const ExponentVector &e) const;

    bool all_integer() const;
    /// Smallest integer multiple with coprime coefficients and a positive leading coefficient.
    Poly primitive_part() const;

    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.family_ == b.family_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void require_same_family(const Poly &other) const;

    Family family_;
    TermMap terms_;
};

std::ostream &operator<<(std::ostream &os, const Poly &p);

/// Degree and weight of a homogeneous, isobaric a-polynomial.
/// Throws DomainError for the zero polynomial and InhomogeneousError for mixed terms.
BiDegree bidegree(const Poly &p);

/// Replace variable `index` by `replacement`, expanding exactly.
Poly substitute(const Poly &p, std::size_t index, const Poly &replacement);

/// Parse the canonical text encoding, e.g. "3*a0^2*a3 - 3*a0*a1*a2 + a1^3".
/// The family is inferred from variable names; `fallback` is used for constants.
Poly parse_poly(std::string_view text, Family fallback = Family::A);

/// Text form of a rational coefficient: "3", "-1/2".
std::string rational_to_string(const Rational &q);
Rational parse_rational(std::string_view text);

} // namespace perpetuants

#endif
