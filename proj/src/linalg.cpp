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
#include <perpetuants/linalg.hpp>

#include <map>
#include <utility>

namespace perpetuants
{

EchelonForm fraction_free_rref(IntMatrix m, std::size_t columns)
{
    EchelonForm out;
    const std::size_t nrows = m.size();
    for (auto &row : m) {
        if (row.size() != columns) {
            throw InternalError("ragged matrix passed to elimination");
        }
    }
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m[p][c] == 0) {
            ++p;
        }
        if (p == nrows) {
            continue;
        }
        std::swap(m[p], m[r]);
        const Integer pivot = m[r][c];
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r) {
                continue;
            }
            const Integer factor = m[i][c];
            for (std::size_t j = 0; j < columns; ++j) {
                Integer v = pivot * m[i][j] - factor * m[r][j];
                if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t())) {
                    throw InternalError("fraction-free elimination lost exactness");
                }
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
        }
        prev = pivot;
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.scale = prev;
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const IntMatrix &m, std::size_t columns)
{
    return fraction_free_rref(m, columns).rank();
}

std::vector<Integer> primitive_vector(std::vector<Integer> v)
{
    Integer g = 0;
    for (const auto &x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) {
        return v;
    }
    bool negate = false;
    for (const auto &x : v) {
        if (x != 0) {
            negate = x < 0;
            break;
        }
    }
    if (negate) {
        g = -g;
    }
    for (auto &x : v) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return v;
}

IntMatrix nullspace(const IntMatrix &m, std::size_t columns)
{
    const EchelonForm ef = fraction_free_rref(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : ef.pivot_columns) {
        is_pivot[c] = true;
    }
    IntMatrix basis;
    for (std::size_t f = 0; f < columns; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        // scale * x_pivot(i) + R[i][f] * x_f = 0 with x_f = scale.
        std::vector<Integer> v(columns, 0);
        v[f] = ef.scale;
        for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i) {
            v[ef.pivot_columns[i]] = -ef.rows[i][f];
        }
        basis.push_back(primitive_vector(std::move(v)));
    }
    return basis;
}

IntMatrix integer_inverse(const IntMatrix &m)
{
    const std::size_t n = m.size();
    IntMatrix aug(n, std::vector<Integer>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) {
            throw InternalError("integer_inverse requires a square matrix");
        }
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = m[i][j];
        }
        aug[i][n + i] = 1;
    }
    EchelonForm ef = fraction_free_rref(std::move(aug), 2 * n);
    if (ef.rank() != n || (n > 0 && ef.pivot_columns.back() != n - 1)) {
        throw InternalError("matrix is singular");
    }
    IntMatrix inv(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Integer &v = ef.rows[i][n + j];
            if (!mpz_divisible_p(v.get_mpz_t(), ef.scale.get_mpz_t())) {
                throw InternalError("inverse has a non-integer entry");
            }
            mpz_divexact(inv[i][j].get_mpz_t(), v.get_mpz_t(), ef.scale.get_mpz_t());
        }
    }
    return inv;
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b)
{
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    IntMatrix out(a.size(), std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) {
            throw InternalError("dimension mismatch in matrix product");
        }
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

CoefficientMatrix coefficient_matrix(std::span<const Poly> polys)
{
    CoefficientMatrix out;
    std::map<ExponentVector, std::size_t, CanonicalTermOrder> index;
    for (const auto &p : polys) {
        for (const auto &[e, c] : p.terms()) {
            index.emplace(e, 0);
        }
    }
    std::size_t k = 0;
    for (auto &[e, i] : index) {
        i = k++;
        out.monomials.push_back(e);
    }
    for (const auto &p : polys) {
        Integer l = 1;
        for (const auto &[e, c] : p.terms()) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        }
        std::vector<Integer> row(k, 0);
        for (const auto &[e, c] : p.terms()) {
            row[index.at(e)] = c.get_num() * (l / c.get_den());
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::size_t poly_rank(std::span<const Poly> polys)
{
    auto cm = coefficient_matrix(polys);
    return rank(cm.rows, cm.monomials.size());
}

} // namespace perpetuants
