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
#include <perpetuants/binforms.hpp>
#include <perpetuants/errors.hpp>
#include <perpetuants/perpetua.hpp>
#include <perpetuants/umbral.hpp>

#include <cstdlib>
#include <sstream>

namespace perpetuants
{

namespace
{

Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Poly a(std::size_t i)
{
    return Poly::variable(Family::A, i);
}

int sign(unsigned e)
{
    return e % 2 == 0 ? 1 : -1;
}

} // namespace

Poly c_k(unsigned k)
{
    if (k < 2) {
        throw DomainError("c_k is defined for k >= 2");
    }
    Poly out(Family::A);
    const int lead = sign(k) * (1 - static_cast<int>(k));
    out += a(1).pow(k) * make_rational(lead, factorial(k));
    for (unsigned j = 2; j <= k; ++j) {
        Poly term = a(0).pow(j - 1) * a(j) * a(1).pow(k - j);
        out += term * make_rational(sign(k - j), factorial(k - j));
    }
    return out;
}

std::string c_k_divided_power_text(unsigned k)
{
    if (k < 2) {
        throw DomainError("c_k is defined for k >= 2");
    }
    std::ostringstream os;
    auto a1_power = [](unsigned e) -> std::string {
        if (e == 0) {
            return "";
        }
        if (e == 1) {
            return "a1";
        }
        return "a1^[" + std::to_string(e) + "]";
    };
    const int lead = sign(k) * (1 - static_cast<int>(k));
    os << (lead < 0 ? "-" : "");
    if (std::abs(lead) != 1) {
        os << std::abs(lead) << '*';
    }
    os << a1_power(k);
    for (unsigned j = 2; j <= k; ++j) {
        os << (sign(k - j) < 0 ? " - " : " + ");
        std::vector<std::string> factors;
        if (j - 1 == 1) {
            factors.emplace_back("a0");
        } else if (j > 2) {
            factors.push_back("a0^" + std::to_string(j - 1));
        }
        if (k - j > 0) {
            factors.push_back(a1_power(k - j));
        }
        factors.push_back("a" + std::to_string(j));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            os << (i ? "*" : "") << factors[i];
        }
    }
    return os.str();
}

CovariantProfile covariant_order(unsigned n, unsigned k, unsigned g)
{
    const long long p = static_cast<long long>(n) * k - 2LL * g;
    if (p < 0) {
        throw DomainError("no covariant: n*k - 2*g is negative");
    }
    return {n, k, g, static_cast<unsigned>(p)};
}

Poly discriminant_printed()
{
    return parse_poly("9*a0^2*a3^2 - 18*a0*a1*a2*a3 + 8*a0*a2^3 + 6*a1^3*a3 - 3*a1^2*a2^2");
}

Poly quartic_b_printed()
{
    return parse_poly("2*a0*a4 - 2*a1*a3 + a2^2");
}

Poly quartic_c_printed()
{
    return parse_poly("2*a2^3 - 6*a1*a2*a3 + 9*a0*a3^2 + 6*a1^2*a4 - 12*a0*a2*a4");
}

Poly verify_s3()
{
    const Poly c2 = c_k(2), c3 = c_k(3);
    const Poly lhs = c2.pow(3) * Rational(8) + c3.pow(2) * Rational(9);
    return lhs.divide_by_monomial(ExponentVector{2});
}

QuarticInvariants verify_s4()
{
    const Poly c2 = c_k(2), c3 = c_k(3), c4 = c_k(4);
    QuarticInvariants q;
    q.b = (c4 * Rational(2) + c2.pow(2)).divide_by_monomial(ExponentVector{2});
    const Poly d = verify_s3();
    q.c = (d - c2 * q.b * Rational(6)).divide_by_monomial(ExponentVector{1});
    const Poly closing = a(0).pow(2) * c2 * q.b * Rational(6) + a(0).pow(3) * q.c - c2.pow(3) * Rational(8)
                         - c3.pow(2) * Rational(9);
    if (!closing.is_zero()) {
        throw InternalError("closing relation for the quartic does not vanish");
    }
    return q;
}

DiscriminantReport discriminant_decomposable_check()
{
    DiscriminantReport r;
    const Poly d = discriminant_printed();
    const Poly b = quartic_b_printed();
    const Poly c = quartic_c_printed();
    r.equals_quartic_combination = d == c_k(2) * b * Rational(6) + a(0) * c;

    const auto dec = decomposable_span(4, 6);
    r.in_limit_decomposables = in_span(d, dec);

    // Products of U-invariants of the cubic (variables a0..a3) with degrees summing to 4.
    std::vector<Poly> cubic_products;
    for (std::size_t h = 1; h <= 2; ++h) {
        for (unsigned j = 0; j <= 6; ++j) {
            const auto left = kernel_oracle(h, j, 3);
            const auto right = kernel_oracle(4 - h, 6 - j, 3);
            for (const auto &u : left) {
                for (const auto &v : right) {
                    cubic_products.push_back(u * v);
                }
            }
        }
    }
    r.decomposable_within_cubic = in_span(d, cubic_products);
    return r;
}

std::vector<RelationCheck> relation_checks()
{
    const Poly c2 = c_k(2), c3 = c_k(3), c4 = c_k(4);
    const Poly d = discriminant_printed();
    const Poly b = quartic_b_printed();
    const Poly c = quartic_c_printed();
    const Poly a0 = a(0);
    std::vector<RelationCheck> out;

    out.push_back({"8*c2^3 + 9*c3^2 = a0^2*D",
                   c2.pow(3) * Rational(8) + c3.pow(2) * Rational(9) == a0.pow(2) * d,
                   {{"c2", c2}, {"c3", c3}, {"D", d}}});
    out.push_back({"2*c4 + c2^2 = a0^2*B", c4 * Rational(2) + c2.pow(2) == a0.pow(2) * b, {{"c4", c4}, {"B", b}}});
    out.push_back({"6*c2*B - D = -a0*C", c2 * b * Rational(6) - d == -(a0 * c), {{"C", c}}});
    out.push_back({"D = 6*c2*B + a0*C", d == c2 * b * Rational(6) + a0 * c, {}});
    const Poly closing = a0.pow(2) * c2 * b * Rational(6) + a0.pow(3) * c - c2.pow(3) * Rational(8)
                         - c3.pow(2) * Rational(9);
    out.push_back({"6*a0^2*c2*B + a0^3*C - 8*c2^3 - 9*c3^2 = 0", closing.is_zero(), {}});

    const Poly d_derived = verify_s3();
    out.push_back({"(8*c2^3 + 9*c3^2)/a0^2 equals the printed D", d_derived == d, {{"quotient", d_derived}}});
    const QuarticInvariants q = verify_s4();
    out.push_back({"quotients B and C equal the printed B and C", q.b == b && q.c == c, {}});
    out.push_back({"B = degree2_perpetuant(4)", b == degree2_perpetuant(4), {}});
    out.push_back({"D(B) = D(C) = D(D) = 0",
                   derivation_D(b).is_zero() && derivation_D(c).is_zero() && derivation_D(d).is_zero(), {}});

    const auto bd_d = bidegree(d), bd_b = bidegree(b), bd_c = bidegree(c);
    const bool profiles = covariant_order(3, static_cast<unsigned>(bd_d.degree), static_cast<unsigned>(bd_d.weight)).is_invariant()
                          && covariant_order(4, static_cast<unsigned>(bd_b.degree), static_cast<unsigned>(bd_b.weight)).is_invariant()
                          && covariant_order(4, static_cast<unsigned>(bd_c.degree), static_cast<unsigned>(bd_c.weight)).is_invariant();
    out.push_back({"D, B, C have covariant order 0", profiles, {}});

    const DiscriminantReport rep = discriminant_decomposable_check();
    out.push_back({"D lies in the decomposables of degree 4, weight 6", rep.in_limit_decomposables, {}});
    out.push_back({"D is not decomposable within the cubic's U-invariants", !rep.decomposable_within_cubic, {}});
    return out;
}

} // namespace perpetuants
