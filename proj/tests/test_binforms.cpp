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

#include <functional>
#include <map>
#include <random>

#include <perpetuants/basis.hpp>
#include <perpetuants/binforms.hpp>
#include <perpetuants/errors.hpp>
#include <perpetuants/perpetua.hpp>
#include <perpetuants/umbral.hpp>

#include "oracles.hpp"

using namespace perpetuants;

namespace
{
Poly a(std::size_t i)
{
    return Poly::variable(Family::A, i);
}
} // namespace

TEST_CASE("c_k values")
{
    CHECK(c_k(2) == -make_rational(1, 2) * a(1).pow(2) + a(0) * a(2));
    CHECK(c_k(3) == make_rational(1, 3) * a(1).pow(3) - a(0) * a(1) * a(2) + a(0).pow(2) * a(3));
    CHECK(c_k(4) == -make_rational(1, 8) * a(1).pow(4) + make_rational(1, 2) * a(0) * a(1).pow(2) * a(2) -
                        a(0).pow(2) * a(1) * a(3) + a(0).pow(3) * a(4));
    CHECK_THROWS_AS(c_k(1), DomainError);
}

TEST_CASE("c_k in divided powers")
{
    CHECK(c_k_divided_power_text(2) == "-a1^[2] + a0*a2");
    CHECK(c_k_divided_power_text(3) == "2*a1^[3] - a0*a1*a2 + a0^2*a3");
    CHECK(c_k_divided_power_text(4) == "-3*a1^[4] + a0*a1^[2]*a2 - a0^2*a1*a3 + a0^3*a4");
    CHECK(c_k_divided_power_text(5) == "4*a1^[5] - a0*a1^[3]*a2 + a0^2*a1^[2]*a3 - a0^3*a1*a4 + a0^4*a5");
    CHECK(c_k_divided_power_text(6) ==
          "-5*a1^[6] + a0*a1^[4]*a2 - a0^2*a1^[3]*a3 + a0^3*a1^[2]*a4 - a0^4*a1*a5 + a0^5*a6");
}

TEST_CASE("c_k are U-invariants of weight equal to degree")
{
    std::mt19937 rng(4);
    for (unsigned k = 2; k <= 8; ++k) {
        Poly c = c_k(k);
        CHECK(derivation_D(c).is_zero());
        CHECK(translate(c).is_constant());
        CHECK(oracle::numerically_translation_invariant(c, rng));
        CHECK(bidegree(c) == BiDegree{k, k});
    }
}

TEST_CASE("a0 and c2..c5 are algebraically independent in low degree")
{
    const unsigned top = 5;
    std::vector<Poly> gens{a(0)};
    for (unsigned k = 2; k <= top; ++k)
        gens.push_back(c_k(k));
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Poly>> by_bidegree;
    std::vector<unsigned> e(gens.size(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == gens.size()) {
            Poly m = Poly::constant(Family::A, 1);
            for (std::size_t j = 0; j < gens.size(); ++j)
                m *= gens[j].pow(e[j]);
            BiDegree b = bidegree(m);
            by_bidegree[{b.degree, b.weight}].push_back(m);
            return;
        }
        for (unsigned x = 0; x <= left; ++x) {
            e[i] = x;
            rec(i + 1, left - x);
        }
        e[i] = 0;
    };
    rec(0, 4);
    std::size_t checked = 0;
    for (const auto &[key, polys] : by_bidegree) {
        CHECK(poly_rank(polys) == polys.size());
        checked += polys.size();
    }
    CHECK(checked == 126);
}

TEST_CASE("covariant profiles")
{
    CHECK(covariant_order(4, 2, 4).is_invariant());
    CHECK(covariant_order(3, 4, 6).is_invariant());
    CovariantProfile form = covariant_order(3, 1, 0);
    CHECK(form.p == 3);
    CHECK_FALSE(form.is_invariant());
    CHECK_THROWS_AS(covariant_order(3, 1, 2), DomainError);
}

TEST_CASE("cubic discriminant")
{
    Poly d = verify_s3();
    CHECK(d == discriminant_printed());
    CHECK(d.to_string() == "9*a0^2*a3^2 - 18*a0*a1*a2*a3 + 8*a0*a2^3 + 6*a1^3*a3 - 3*a1^2*a2^2");
    CHECK(derivation_D(d).is_zero());
    CHECK(bidegree(d) == BiDegree{4, 6});
    CHECK(8 * c_k(2).pow(3) + 9 * c_k(3).pow(2) == a(0).pow(2) * d);
}

TEST_CASE("quartic invariants")
{
    QuarticInvariants q = verify_s4();
    CHECK(q.b == quartic_b_printed());
    CHECK(q.c == quartic_c_printed());
    CHECK(q.b == degree2_perpetuant(4));
    CHECK(q.b == parse_poly("2*a0*a4 - 2*a1*a3 + a2^2"));
    CHECK(q.c == parse_poly("2*a2^3 - 6*a1*a2*a3 + 9*a0*a3^2 + 6*a1^2*a4 - 12*a0*a2*a4"));
    Poly D = discriminant_printed();
    Poly c2 = c_k(2);
    CHECK(2 * c_k(4) + c2.pow(2) == a(0).pow(2) * q.b);
    CHECK(6 * c2 * q.b - D == -a(0) * q.c);
    CHECK(D == 6 * c2 * q.b + a(0) * q.c);
    CHECK((6 * a(0).pow(2) * c2 * q.b + a(0).pow(3) * q.c - 8 * c2.pow(3) - 9 * c_k(3).pow(2)).is_zero());
    CHECK(derivation_D(q.c).is_zero());
}

TEST_CASE("discriminant decomposability")
{
    DiscriminantReport r = discriminant_decomposable_check();
    CHECK(r.equals_quartic_combination);
    CHECK(r.in_limit_decomposables);
    CHECK_FALSE(r.decomposable_within_cubic);
}

TEST_CASE("relation checks all pass")
{
    auto checks = relation_checks();
    CHECK(checks.size() == 12);
    for (const auto &c : checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}
