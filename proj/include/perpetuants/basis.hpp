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

#ifndef PERPETUANTS_BASIS_HPP
#define PERPETUANTS_BASIS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <perpetuants/poly.hpp>
#include <perpetuants/symfunc.hpp>

namespace perpetuants
{

/// U_{k2,...,kn}: a basis element of the U-invariants of degree n and weight g.
struct InvariantElement {
    std::size_t n = 0;
    unsigned g = 0;
    /// (k2, ..., kn); k1 = 0 is implicit.
    std::vector<unsigned> k;
    Poly value{Family::A};
};

enum class Normalization {
    /// Exactly the alpha-matrix output.
    Raw,
    /// Content removed, leading coefficient positive.
    Primitive,
};

/// Basis of S_{n,g} read off the potenziante via the alpha transition matrix,
/// ordered like e_indices(n, g).
std::vector<InvariantElement> u_basis(std::size_t n, unsigned g,
                                      Normalization norm = Normalization::Raw);

/// a-monomials of degree n and weight g, canonical term order. If max_index is set,
/// only a_0..a_{max_index} may occur.
std::vector<ExponentVector> a_monomials(std::size_t n, unsigned g,
                                        std::optional<std::size_t> max_index = std::nullopt);

/// Brute-force basis of ker D on degree n, weight g: null space of the matrix of D.
/// With max_index, restricts to polynomials in a_0..a_{max_index}.
std::vector<Poly> kernel_oracle(std::size_t n, unsigned g,
                                std::optional<std::size_t> max_index = std::nullopt);

struct DimensionSeries {
    std::size_t n = 0;
    std::vector<Integer> coefficients;

    Integer at(unsigned g) const
    {
        return g < coefficients.size() ? coefficients[g] : Integer(0);
    }
};

/// Coefficients of 1/((1-x^2)...(1-x^n)) for g = 0..g_max. Cross-checked against
/// a partition count; throws InternalError on disagreement.
DimensionSeries dim_series(std::size_t n, unsigned g_max);

/// N_{n,g} as the number of partitions of g into parts between 2 and n.
Integer dimension_by_partitions(std::size_t n, unsigned g);

struct SpanReport {
    bool equal = false;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    std::size_t rank_union = 0;
};

/// Compare spans by exact ranks. All nonzero inputs must share one bidegree.
SpanReport span_equal(std::span<const Poly> a, std::span<const Poly> b);

/// True when p lies in the span of `space`.
bool in_span(const Poly &p, std::span<const Poly> space);

std::vector<Poly> values(const std::vector<InvariantElement> &elements);

} // namespace perpetuants

#endif
