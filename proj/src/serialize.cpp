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
#include <perpetuants/serialize.hpp>

namespace perpetuants
{

namespace
{

std::size_t to_size(const Integer &v)
{
    if (!v.fits_ulong_p()) {
        throw InternalError("integer too large for JSON number field");
    }
    return v.get_ui();
}

template <class T>
T require(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing JSON field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("bad JSON field '") + key + "': " + e.what());
    }
}

} // namespace

Json to_json(const Poly &p)
{
    Json terms = Json::array();
    for (const auto &[e, c] : p.terms()) {
        Json ex = Json::object();
        for (const auto &[i, x] : e.entries()) {
            ex[std::to_string(i)] = x;
        }
        terms.push_back(Json{{"c", rational_to_string(c)}, {"e", std::move(ex)}});
    }
    return Json{{"family", family_name(p.family())}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const Json &j)
{
    const auto fam = require<std::string>(j, "family");
    Family family;
    if (fam == "a") {
        family = Family::A;
    } else if (fam == "L") {
        family = Family::L;
    } else {
        throw ParseError("unknown polynomial family '" + fam + "'");
    }
    if (!j.contains("terms") || !j.at("terms").is_array()) {
        throw ParseError("'terms' must be an array");
    }
    Poly p(family);
    for (const auto &t : j.at("terms")) {
        const Rational c = parse_rational(require<std::string>(t, "c"));
        if (!t.contains("e") || !t.at("e").is_object()) {
            throw ParseError("term without exponent object");
        }
        std::vector<std::uint32_t> dense;
        for (const auto &[key, val] : t.at("e").items()) {
            std::size_t idx = 0;
            try {
                idx = std::stoul(key);
            } catch (const std::exception &) {
                throw ParseError("bad variable index '" + key + "'");
            }
            if (!val.is_number_unsigned()) {
                throw ParseError("exponents must be nonnegative integers");
            }
            if (dense.size() <= idx) {
                dense.resize(idx + 1, 0);
            }
            dense[idx] = val.get<std::uint32_t>();
        }
        ExponentVector e(std::move(dense));
        if (family == Family::L && e[0] != 0) {
            throw ParseError("L0 is not a valid variable");
        }
        p.add_term(e, c);
    }
    return p;
}

Json to_json(const InvariantElement &el)
{
    return Json{{"k", el.k}, {"degree", el.n}, {"weight", el.g}, {"poly", to_json(el.value)}};
}

InvariantElement invariant_from_json(const Json &j)
{
    InvariantElement el;
    el.k = require<std::vector<unsigned>>(j, "k");
    el.n = require<std::size_t>(j, "degree");
    el.g = require<unsigned>(j, "weight");
    if (!j.contains("poly")) {
        throw ParseError("missing JSON field 'poly'");
    }
    el.value = poly_from_json(j.at("poly"));
    return el;
}

Json to_json(const ComplementCertificate &c)
{
    return Json{{"n", c.n},
                {"g", c.g},
                {"dim_total", c.dim_total},
                {"dim_dec", c.dim_decomposable},
                {"dim_perp", c.dim_perpetuant},
                {"stroh", to_size(c.stroh_coefficient)},
                {"ok", c.ok()}};
}

ComplementCertificate certificate_from_json(const Json &j)
{
    ComplementCertificate c;
    c.n = require<std::size_t>(j, "n");
    c.g = require<unsigned>(j, "g");
    c.dim_total = require<std::size_t>(j, "dim_total");
    c.dim_decomposable = require<std::size_t>(j, "dim_dec");
    c.dim_perpetuant = require<std::size_t>(j, "dim_perp");
    c.stroh_coefficient = static_cast<unsigned long>(require<std::size_t>(j, "stroh"));
    const bool ok = require<bool>(j, "ok");
    // The JSON form does not carry the union rank; reconstruct it from the direct-sum claim.
    c.direct_sum_ok = ok;
    c.rank_union = ok ? c.dim_total : 0;
    if (ok && !c.ok()) {
        throw ParseError("certificate marked ok but its counts disagree");
    }
    return c;
}

Json to_json(const PotenziantExpansion &p)
{
    Json rows = Json::array();
    for (const auto &r : p.rows) {
        rows.push_back(Json{{"h", r.h.padded(p.n)}, {"a", r.a_monomial.to_string()}});
    }
    Json e_rows = Json::array();
    for (const auto &r : p.e_rows) {
        e_rows.push_back(Json{{"k", r.k.k}, {"U", r.u.to_string()}});
    }
    return Json{{"n", p.n}, {"g", p.g}, {"rows", std::move(rows)}, {"e_rows", std::move(e_rows)}};
}

Json to_json(const TransitionMatrix &t)
{
    Json partitions = Json::array();
    for (const auto &h : t.partitions) {
        partitions.push_back(h.to_string(t.n));
    }
    Json eindices = Json::array();
    for (const auto &k : t.eindices) {
        eindices.push_back(k.k);
    }
    Json entries = Json::array();
    for (const auto &row : t.entries) {
        Json r = Json::array();
        for (const auto &v : row) {
            r.push_back(v.get_str());
        }
        entries.push_back(std::move(r));
    }
    const bool beta = t.direction == TransitionDirection::Beta;
    return Json{{"direction", beta ? "beta" : "alpha"},
                {"n", t.n},
                {"g", t.g},
                {"rows", beta ? partitions : eindices},
                {"columns", beta ? eindices : partitions},
                {"entries", std::move(entries)}};
}

Json to_json(const DimensionSeries &s, unsigned g_min)
{
    Json coeffs = Json::array();
    for (std::size_t g = g_min; g < s.coefficients.size(); ++g) {
        coeffs.push_back(to_size(s.coefficients[g]));
    }
    return Json{{"n", s.n}, {"g_min", g_min}, {"coefficients", std::move(coeffs)}};
}

} // namespace perpetuants
