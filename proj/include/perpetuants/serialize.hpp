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

#ifndef PERPETUANTS_SERIALIZE_HPP
#define PERPETUANTS_SERIALIZE_HPP

#include <json.hpp>

#include <perpetuants/basis.hpp>
#include <perpetuants/perpetua.hpp>
#include <perpetuants/poly.hpp>
#include <perpetuants/symfunc.hpp>
#include <perpetuants/umbral.hpp>

namespace perpetuants
{

using Json = nlohmann::ordered_json;

// {"family":"a","terms":[{"c":"3","e":{"0":2,"3":1}}, ...]} in canonical term order.
Json to_json(const Poly &p);
Poly poly_from_json(const Json &j);

// {"k":[k2,...,kn],"degree":n,"weight":g,"poly":<poly>}
Json to_json(const InvariantElement &el);
InvariantElement invariant_from_json(const Json &j);

// {"n":4,"g":6,"dim_total":3,"dim_dec":3,"dim_perp":0,"stroh":0,"ok":true}
Json to_json(const ComplementCertificate &c);
ComplementCertificate certificate_from_json(const Json &j);

// {"n":3,"g":3,"rows":[{"h":[3,0,0],"a":"a0^2*a3"}],"e_rows":[{"k":[0,0,1],"U":"..."}]}
Json to_json(const PotenziantExpansion &p);

// {"direction":"beta","n":..,"g":..,"rows":[..],"columns":[..],"entries":[["1","0"],..]}
Json to_json(const TransitionMatrix &t);

// {"n":3,"g_min":0,"coefficients":[1,0,1,...]}
Json to_json(const DimensionSeries &s, unsigned g_min = 0);

} // namespace perpetuants

#endif
