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
#include <perpetuants/serialize.hpp>

#include "oracles.hpp"

using namespace perpetuants;

TEST_CASE("poly json")
{
    Poly u = u_basis(3, 3)[0].value;
    Json j = to_json(u);
    CHECK(j.dump() ==
          R"({"family":"a","terms":[{"c":"3","e":{"0":2,"3":1}},{"c":"-3","e":{"0":1,"1":1,"2":1}},{"c":"1","e":{"1":3}}]})");
    CHECK(poly_from_json(j) == u);
    CHECK(to_json(Poly(Family::L)).dump() == R"({"family":"L","terms":[]})");
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"family":"x","terms":[]})")), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"family":"a"})")), ParseError);

    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        Poly p = oracle::random_poly(rng, trial % 2 ? Family::A : Family::L);
        CHECK(poly_from_json(Json::parse(to_json(p).dump())) == p);
    }
}

TEST_CASE("invariant element json")
{
    for (const auto &el : u_basis(4, 8)) {
        Json j = to_json(el);
        CHECK(j["degree"] == 4);
        CHECK(j["weight"] == 8);
        InvariantElement back = invariant_from_json(Json::parse(j.dump()));
        CHECK(back.k == el.k);
        CHECK(back.n == el.n);
        CHECK(back.g == el.g);
        CHECK(back.value == el.value);
    }
}

TEST_CASE("certificate json")
{
    ComplementCertificate c = verify_complement(4, 6);
    Json j = to_json(c);
    CHECK(j.dump() == R"({"n":4,"g":6,"dim_total":3,"dim_dec":3,"dim_perp":0,"stroh":0,"ok":true})");
    ComplementCertificate back = certificate_from_json(j);
    CHECK(back.dim_total == 3);
    CHECK(back.dim_decomposable == 3);
    CHECK(back.ok());
}

TEST_CASE("other documents")
{
    Json p = to_json(potenziante(3, 3));
    CHECK(p["rows"].size() == 3);
    CHECK(p["rows"][0]["a"] == "a0^2*a3");
    CHECK(p["e_rows"].size() == 3);
    Json t = to_json(transition_beta(3, 3));
    CHECK(t["direction"] == "beta");
    CHECK(t["entries"].size() == 3);
    Json s = to_json(dim_series(3, 6));
    CHECK(s.dump() == R"({"n":3,"g_min":0,"coefficients":[1,0,1,1,1,1,2]})");
}
