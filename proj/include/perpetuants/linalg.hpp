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

#ifndef PERPETUANTS_LINALG_HPP
#define PERPETUANTS_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <perpetuants/poly.hpp>

namespace perpetuants
{

using IntMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free reduced row echelon form.
/// Every pivot entry equals `scale`; non-pivot rows are zero and sit at the bottom.
struct EchelonForm {
    IntMatrix rows;
    std::vector<std::size_t> pivot_columns;
    Integer scale = 1;

    std::size_t rank() const
    {
        return pivot_columns.size();
    }
};

/// Bareiss-style Gauss-Jordan elimination. Pivots are chosen as the first nonzero
/// entry scanning rows top to bottom within each column, left to right.
EchelonForm fraction_free_rref(IntMatrix m, std::size_t columns);

std::size_t rank(const IntMatrix &m, std::size_t columns);

/// Integer basis of {x : M x = 0}, one primitive vector per free column, in column order.
IntMatrix nullspace(const IntMatrix &m, std::size_t columns);

/// Inverse of a square integer matrix; throws InternalError when singular or not integral.
IntMatrix integer_inverse(const IntMatrix &m);

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b);

/// Coefficient matrix of a list of polynomials over the union of their monomials.
/// Rows are scaled by the lcm of their denominators; columns follow canonical term order.
struct CoefficientMatrix {
    std::vector<ExponentVector> monomials;
    IntMatrix rows;
};

CoefficientMatrix coefficient_matrix(std::span<const Poly> polys);

/// Dimension of the span of the polynomials.
std::size_t poly_rank(std::span<const Poly> polys);

/// Primitive integer vector proportional to v (content removed, first nonzero entry positive).
std::vector<Integer> primitive_vector(std::vector<Integer> v);

} // namespace perpetuants

#endif
