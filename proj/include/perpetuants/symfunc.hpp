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

#ifndef PERPETUANTS_SYMFUNC_HPP
#define PERPETUANTS_SYMFUNC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <perpetuants/linalg.hpp>
#include <perpetuants/poly.hpp>

namespace perpetuants
{

/// Weakly decreasing list of positive parts.
class Partition
{
public:
    Partition() = default;
    /// Zero parts are dropped; throws DomainError if the parts are not weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned> &parts() const
    {
        return parts_;
    }
    std::size_t length() const
    {
        return parts_.size();
    }
    unsigned weight() const;
    /// Parts followed by zeros up to `n` entries; requires length() <= n.
    std::vector<unsigned> padded(std::size_t n) const;

    /// "4+2" or, padded to n entries, "4+2+0". The empty partition prints as "0".
    std::string to_string() const;
    std::string to_string(std::size_t n) const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<unsigned> parts_;
};

/// Exponent vector (k1, ..., kn) of the e-monomial e1^k1 ... en^kn.
struct EIndex {
    std::vector<unsigned> k;

    std::size_t size() const
    {
        return k.size();
    }
    /// Sum of i * k_i (1-based i).
    unsigned weight() const;
    /// Partition whose i-th part is k_i + ... + k_n: the leading exponent of e^k.
    Partition leading_partition() const;
    std::string to_string() const;

    friend bool operator==(const EIndex &, const EIndex &) = default;
};

/// Partitions of g with at most max_parts parts, each >= min_part, largest first
/// (reverse lexicographic order).
std::vector<Partition> partitions(unsigned g, std::size_t max_parts, unsigned min_part = 1);

/// Partitions of g whose parts all lie in [lo, hi], reverse lexicographic order.
std::vector<Partition> partitions_with_parts_in(unsigned g, unsigned lo, unsigned hi);

/// All EIndex values of length n and weight g, ordered so that their leading
/// partitions appear in reverse lexicographic order.
std::vector<EIndex> e_indices(std::size_t n, unsigned g);

/// m_h(L1..Ln): sum of the distinct permutations of L^h.
Poly monomial_sum(const Partition &h, std::size_t n);

/// e_i(L1..Ln).
Poly elementary(std::size_t i, std::size_t n);

/// Expanded e1^k1 ... en^kn in L1..Ln.
Poly e_monomial(const EIndex &k, std::size_t n);

enum class TransitionDirection {
    /// e-monomials expanded in m: rows are partitions, columns EIndex values.
    Beta,
    /// m expanded in e-monomials: rows are EIndex values, columns partitions.
    Alpha,
};

struct TransitionMatrix {
    TransitionDirection direction = TransitionDirection::Beta;
    std::size_t n = 0;
    unsigned g = 0;
    std::vector<Partition> partitions;
    std::vector<EIndex> eindices;
    IntMatrix entries;
};

/// beta[h][k] = coefficient of L^h in e^k.
TransitionMatrix transition_beta(std::size_t n, unsigned g);

/// alpha[k][h] = coefficient of e^k in m_h; the exact inverse of beta.
/// Results are memoised; see set_transition_cache_enabled.
TransitionMatrix transition_alpha(std::size_t n, unsigned g);

/// The memo behaves as a value cache; disabling it only changes speed.
void set_transition_cache_enabled(bool enabled);
void clear_transition_cache();

/// Substitute Ln := -(L1 + ... + L_{n-1}).
Poly bar_reduce(const Poly &p, std::size_t n);

/// Sum of the reduced lambda-bar variables indexed by T (1-based subset of {1..n}).
Poly reduced_linear_form(const std::vector<std::size_t> &subset, std::size_t n);

/// Product of the linear forms over h-subsets of {1..n}; for n = 2h only subsets containing 1.
Poly p_h(std::size_t n, std::size_t h);

/// p_1 p_2 ... p_m with m = floor(n/2); requires n >= 3.
Poly q_n(std::size_t n);

/// Lexicographically greatest exponent with nonzero coefficient.
ExponentVector leading_exponent(const Poly &p);

struct LeadingMonomial {
    ExponentVector exponent;
    Rational coefficient;
};
LeadingMonomial leading_monomial(const Poly &p);

/// Lambda exponent vector as a dense list (r1, ..., r_len).
std::vector<std::uint32_t> lambda_exponents(const ExponentVector &e, std::size_t len);

} // namespace perpetuants

#endif
