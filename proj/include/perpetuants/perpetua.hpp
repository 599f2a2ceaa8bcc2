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

#ifndef PERPETUANTS_PERPETUA_HPP
#define PERPETUANTS_PERPETUA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <perpetuants/basis.hpp>
#include <perpetuants/poly.hpp>

namespace perpetuants
{

/// Coefficients of the generating function for perpetuants of degree n:
/// x^(2^(n-1)-1)/((1-x^2)...(1-x^n)) for n > 2, x^2/(1-x^2) for n = 2, 1 for n = 1.
DimensionSeries stroh_series(std::size_t n, unsigned g_max);

/// Tail (k2, ..., kn) of the threshold vector: (0,1) for n = 3, (0,2^(n-4),...,2,1,1) for n > 3.
struct ThresholdVector {
    std::size_t n = 0;
    std::vector<unsigned> k;

    unsigned weight() const;
};

ThresholdVector threshold(std::size_t n);

/// Componentwise k >= t on (k2, ..., kn).
bool dominates(const std::vector<unsigned> &k, const std::vector<unsigned> &t);

/// Elements of u_basis(n, g) whose index dominates the threshold (or `override_threshold`).
std::vector<InvariantElement> perpetuant_basis(std::size_t n, unsigned g,
                                               const std::optional<ThresholdVector> &override_threshold = std::nullopt);

/// sum_{j<h} 2(-1)^j a_j a_{g-j} + (-1)^h a_h^2 for g = 2h.
Poly degree2_perpetuant(unsigned g);

/// Products u*v, u in S_{h,j}, v in S_{n-h,g-j}, over 1 <= h <= n/2.
std::vector<Poly> decomposable_span(std::size_t n, unsigned g);

struct ComplementCertificate {
    std::size_t n = 0;
    unsigned g = 0;
    std::size_t dim_total = 0;
    std::size_t dim_decomposable = 0;
    std::size_t dim_perpetuant = 0;
    std::size_t rank_union = 0;
    Integer stroh_coefficient = 0;
    bool direct_sum_ok = false;

    /// Every check passed, including agreement with the Stroh coefficient.
    bool ok() const;
};

/// Checks Dec_{n,g} (+) span(perpetuant_basis) = S_{n,g} by exact ranks and compares the
/// perpetuant count with the Stroh coefficient. Failures are reported, not thrown.
ComplementCertificate verify_complement(std::size_t n, unsigned g,
                                        const std::optional<ThresholdVector> &override_threshold = std::nullopt);

/// Whether Dec_{n,g} is spanned by those u_basis elements that happen to lie in it.
struct DecomposableSubsetReport {
    std::size_t dim_decomposable = 0;
    std::size_t u_elements_in_dec = 0;
    bool spanned_by_u_subset = false;
};

DecomposableSubsetReport decomposable_subset_report(std::size_t n, unsigned g);

} // namespace perpetuants

#endif
