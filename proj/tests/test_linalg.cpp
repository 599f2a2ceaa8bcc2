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

#include <perpetuants/errors.hpp>
#include <perpetuants/linalg.hpp>

using namespace perpetuants;

namespace
{
IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    IntMatrix m;
    for (auto r : rows) {
        m.emplace_back();
        for (long x : r)
            m.back().push_back(Integer(x));
    }
    return m;
}

Poly a(std::size_t i)
{
    return Poly::variable(Family::A, i);
}
} // namespace

TEST_CASE("rref pivots share the scale")
{
    EchelonForm f = fraction_free_rref(mat({{2, 4, 1}, {1, 2, 3}, {3, 6, 4}}), 3);
    CHECK(f.rank() == 2);
    CHECK(f.pivot_columns == std::vector<std::size_t>{0, 2});
    for (std::size_t i = 0; i < f.rank(); ++i)
        CHECK(f.rows[i][f.pivot_columns[i]] == f.scale);
    CHECK(f.rows[2] == std::vector<Integer>{0, 0, 0});
}

TEST_CASE("rank and nullspace")
{
    IntMatrix m = mat({{1, 2, 3}, {2, 4, 6}});
    CHECK(rank(m, 3) == 1);
    IntMatrix ns = nullspace(m, 3);
    REQUIRE(ns.size() == 2);
    for (const auto &v : ns) {
        Integer dot = 0;
        for (std::size_t j = 0; j < 3; ++j)
            dot += m[0][j] * v[j];
        CHECK(dot == 0);
    }
    CHECK(rank(IntMatrix{}, 4) == 0);
    CHECK(nullspace(IntMatrix{}, 2).size() == 2);
    CHECK(nullspace(mat({{1, 0}, {0, 1}}), 2).empty());
}

TEST_CASE("nullspace of a random matrix annihilates it")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        IntMatrix m(r, std::vector<Integer>(c));
        for (auto &row : m)
            for (auto &x : row)
                x = static_cast<long>(rng() % 7) - 3;
        IntMatrix ns = nullspace(m, c);
        CHECK(ns.size() + rank(m, c) == c);
        for (const auto &v : ns)
            for (const auto &row : m) {
                Integer dot = 0;
                for (std::size_t j = 0; j < c; ++j)
                    dot += row[j] * v[j];
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("integer inverse")
{
    IntMatrix m = mat({{1, 0, 0}, {2, 1, 0}, {5, 3, 1}});
    IntMatrix inv = integer_inverse(m);
    CHECK(multiply(m, inv) == mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK_THROWS_AS(integer_inverse(mat({{1, 2}, {2, 4}})), InternalError);
    CHECK_THROWS_AS(integer_inverse(mat({{2, 0}, {0, 1}})), InternalError);
}

TEST_CASE("polynomial coefficient matrices")
{
    std::vector<Poly> ps{a(1).pow(2) - 2 * a(0) * a(2), make_rational(1, 2) * a(0) * a(2)};
    CoefficientMatrix cm = coefficient_matrix(ps);
    REQUIRE(cm.monomials.size() == 2);
    CHECK(cm.monomials[0] == ExponentVector{1, 0, 1});
    CHECK(cm.rows[1] == std::vector<Integer>{1, 0});
    CHECK(poly_rank(ps) == 2);
    std::vector<Poly> dep{a(1), 3 * a(1), Poly(Family::A)};
    CHECK(poly_rank(dep) == 1);
    CHECK(primitive_vector({0, -4, 6}) == std::vector<Integer>{0, 2, -3});
}
