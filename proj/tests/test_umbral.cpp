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

#include <doctest.h>

#include <random>
#include <tuple>

#include <perpetuants/umbral.hpp>

#include "oracles.hpp"

using namespace perpetuants;

namespace
{
Poly a(std::size_t i)
{
    return Poly::variable(Family::A, i);
}

UmbralPoly random_umbral(std::mt19937 &rng, std::size_t umbrae)
{
    std::uniform_int_distribution<unsigned> exp(0, 5);
    std::uniform_int_distribution<int> coef(-4, 4), terms(1, 6);
    UmbralPoly u(umbrae);
    int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        UmbralMonomial m{std::vector<unsigned>(umbrae)};
        for (auto &r : m.r)
            r = exp(rng);
        u.add_term(m, coef(rng));
    }
    return u;
}

EIndex lowered(EIndex k)
{
    --k.k[0];
    return k;
}
} // namespace

TEST_CASE("E on umbral monomials")
{
    CHECK(umbral_E(UmbralMonomial{{3, 2, 0, 0, 0}}) == a(0).pow(3) * a(2) * a(3));
    CHECK(umbral_E(UmbralMonomial{{2, 2}}) == a(2).pow(2));
    CHECK(umbral_E(UmbralMonomial{{0, 0, 0}}) == a(0).pow(3));
}

TEST_CASE("derivation D")
{
    CHECK(derivation_D(a(0)).is_zero());
    CHECK(derivation_D(a(3)) == a(2));
    CHECK(derivation_D(a(1).pow(2) - 2 * a(0) * a(2)).is_zero());
    CHECK(derivation_D(Poly::constant(Family::A, 5)).is_zero());
}

TEST_CASE("translate")
{
    CHECK(translate(a(1)).to_string() == "(a1) + (a0)*t");
    CHECK(translate(a(2)).to_string() == "(a2) + (a1)*t + (1/2*a0)*t^2");
    TranslatedPoly t2 = translate(a(2));
    REQUIRE(t2.coeffs.size() == 3);
    CHECK(t2.coefficient(0) == a(2));
    CHECK(t2.coefficient(1) == a(1));
    CHECK(t2.coefficient(2) == make_rational(1, 2) * a(0));
    CHECK(t2.coefficient(7).is_zero());
    TranslatedPoly inv = translate(a(1).pow(2) - 2 * a(0) * a(2));
    CHECK(inv.is_constant());
    CHECK(inv.coefficient(0) == a(1).pow(2) - 2 * a(0) * a(2));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = oracle::random_poly(rng);
        CHECK(translate(p).coefficient(1) == derivation_D(p));
        CHECK(translate(p).coefficient(0) == p);
    }
}

TEST_CASE("E commutes with the total derivative")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 4;
        UmbralPoly u = random_umbral(rng, n);
        CHECK(umbral_E(u.total_derivative()) == derivation_D(umbral_E(u)));
    }
}

TEST_CASE("E is multiplicative on disjoint umbrae")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        UmbralPoly f = random_umbral(rng, 1 + rng() % 3);
        UmbralPoly g = random_umbral(rng, 1 + rng() % 3);
        CHECK(umbral_E(f.disjoint_product(g)) == umbral_E(f) * umbral_E(g));
    }
}

TEST_CASE("potenziante goldens")
{
    CHECK(potenziante(3, 3).rows_text() == "m_{3,0,0}*a0^2*a3 + m_{2,1,0}*a0*a1*a2 + m_{1,1,1}*a1^3");
    CHECK(potenziante(3, 2).rows_text() == "m_{2,0,0}*a0^2*a2 + m_{1,1,0}*a0*a1^2");
    CHECK(potenziante(2, 4).rows_text() == "m_{4,0}*a0*a4 + m_{3,1}*a1*a3 + m_{2,2}*a2^2");
    PotenziantExpansion one = potenziante(1, 5);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows_text() == "m_{5}*a5");
}

TEST_CASE("potenziante routes agree")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned g = 0; g <= 8; ++g) {
            PotenziantExpansion p = potenziante(n, g);
            LambdaAPoly direct = potenziante_direct(n, g);
            CHECK(p.from_rows() == direct);
            CHECK(p.from_e_rows() == direct);
        }
}

TEST_CASE("D pi_{n,g} = e1 pi_{n,g-1}")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned g = 1; g <= 8; ++g)
            CHECK(potenziante_direct(n, g).apply_D() == potenziante_direct(n, g - 1).times_lambda(elementary(1, n)));
}

TEST_CASE("D lowers k1 on tilde U")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned g = 0; g <= 8; ++g) {
            PotenziantExpansion p = potenziante(n, g);
            PotenziantExpansion below = g > 0 ? potenziante(n, g - 1) : PotenziantExpansion{};
            for (const auto &row : p.e_rows) {
                Poly du = derivation_D(row.u);
                if (row.k.k[0] == 0) {
                    CHECK(du.is_zero());
                    continue;
                }
                EIndex target = lowered(row.k);
                bool found = false;
                for (const auto &b : below.e_rows)
                    if (b.k == target) {
                        CHECK(du == b.u);
                        found = true;
                    }
                CHECK(found);
            }
        }
}

TEST_CASE("potenziante splits over a block of umbrae")
{
    for (auto [n, h, g] : std::vector<std::tuple<std::size_t, std::size_t, unsigned>>{{3, 1, 4}, {4, 2, 5}}) {
        LambdaAPoly sum;
        for (unsigned j = 0; j <= g; ++j)
            sum += potenziante_direct(h, j) * potenziante_direct(n - h, g - j).shift_lambda(h);
        CHECK(sum == potenziante_direct(n, g));
    }
}
