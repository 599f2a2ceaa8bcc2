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

#ifndef PERPETUANTS_BINFORMS_HPP
#define PERPETUANTS_BINFORMS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <perpetuants/poly.hpp>

namespace perpetuants
{

/// c_k = (-1)^k (1-k) a1^k/k! + sum_{j=2..k} (-1)^(k-j) a0^(j-1) a_j a1^(k-j)/(k-j)!.
Poly c_k(unsigned k);

/// c_k in the divided-power notation a1^[j] used by the classical tables,
/// e.g. "-3*a1^[4] + a0*a1^[2]*a2 - a0^2*a1*a3 + a0^3*a4".
std::string c_k_divided_power_text(unsigned k);

/// Covariant of a binary form of degree n: source of degree k and weight g has order p = nk - 2g.
struct CovariantProfile {
    unsigned n = 0;
    unsigned k = 0;
    unsigned g = 0;
    unsigned p = 0;

    bool is_invariant() const
    {
        return p == 0;
    }
};

CovariantProfile covariant_order(unsigned n, unsigned k, unsigned g);

/// The discriminant of the binary cubic as printed in the classical relation.
Poly discriminant_printed();
/// The degree-2 invariant of the binary quartic, as printed.
Poly quartic_b_printed();
/// The degree-3 invariant of the binary quartic, as printed.
Poly quartic_c_printed();

/// (8 c2^3 + 9 c3^2) / a0^2.
Poly verify_s3();

struct QuarticInvariants {
    Poly b{Family::A};
    Poly c{Family::A};
};

/// B = (2 c4 + c2^2)/a0^2 and C = (D - 6 c2 B)/a0; throws InternalError if
/// 6 a0^2 c2 B + a0^3 C - 8 c2^3 - 9 c3^2 is not zero.
QuarticInvariants verify_s4();

struct DiscriminantReport {
    /// D = 6 c2 B + a0 C.
    bool equals_quartic_combination = false;
    /// D lies in the span of the decomposable U-invariants of degree 4, weight 6.
    bool in_limit_decomposables = false;
    /// D lies in the span of products of lower-degree U-invariants in a0..a3 only.
    bool decomposable_within_cubic = false;
};

DiscriminantReport discriminant_decomposable_check();

struct RelationCheck {
    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, Poly>> polys;
};

/// Every classical identity for degrees 3 and 4 with its outcome.
std::vector<RelationCheck> relation_checks();

} // namespace perpetuants

#endif
