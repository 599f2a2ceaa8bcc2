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
#include <perpetuants/poly.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace perpetuants
{

const char *family_name(Family f)
{
    return f == Family::A ? "a" : "L";
}

// ExponentVector

ExponentVector::ExponentVector(std::vector<std::uint32_t> dense) : exps_(std::move(dense))
{
    trim();
}

ExponentVector::ExponentVector(std::initializer_list<std::uint32_t> dense) : exps_(dense)
{
    trim();
}

ExponentVector ExponentVector::single(std::size_t index, std::uint32_t exponent)
{
    ExponentVector e;
    if (exponent != 0) {
        e.exps_.assign(index + 1, 0);
        e.exps_[index] = exponent;
    }
    return e;
}

void ExponentVector::trim()
{
    while (!exps_.empty() && exps_.back() == 0) {
        exps_.pop_back();
    }
}

std::vector<std::uint32_t> ExponentVector::window(std::size_t from, std::size_t len) const
{
    std::vector<std::uint32_t> out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = (*this)[from + i];
    }
    return out;
}

std::vector<std::pair<std::size_t, std::uint32_t>> ExponentVector::entries() const
{
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != 0) {
            out.emplace_back(i, exps_[i]);
        }
    }
    return out;
}

std::uint64_t ExponentVector::degree() const
{
    std::uint64_t d = 0;
    for (auto x : exps_) {
        d += x;
    }
    return d;
}

std::uint64_t ExponentVector::weight() const
{
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        w += static_cast<std::uint64_t>(i) * exps_[i];
    }
    return w;
}

ExponentVector ExponentVector::with(std::size_t index, std::uint32_t exponent) const
{
    ExponentVector e = *this;
    if (index >= e.exps_.size()) {
        e.exps_.resize(index + 1, 0);
    }
    e.exps_[index] = exponent;
    e.trim();
    return e;
}

bool ExponentVector::divides(const ExponentVector &other) const
{
    return dominated_by(*this, other);
}

ExponentVector ExponentVector::operator+(const ExponentVector &other) const
{
    ExponentVector e;
    e.exps_.resize(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < e.exps_.size(); ++i) {
        e.exps_[i] = (*this)[i] + other[i];
    }
    return e;
}

ExponentVector ExponentVector::operator-(const ExponentVector &other) const
{
    if (!other.divides(*this)) {
        throw InternalError("ExponentVector subtraction would go negative");
    }
    ExponentVector e;
    e.exps_.resize(exps_.size(), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        e.exps_[i] = exps_[i] - other[i];
    }
    e.trim();
    return e;
}

bool lex_less(const ExponentVector &a, const ExponentVector &b)
{
    const auto n = std::max(a.extent(), b.extent());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

bool dominated_by(const ExponentVector &a, const ExponentVector &b)
{
    for (std::size_t i = 0; i < a.extent(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

bool CanonicalTermOrder::operator()(const ExponentVector &a, const ExponentVector &b) const
{
    const auto da = a.degree(), db = b.degree();
    if (da != db) {
        return da > db;
    }
    return lex_less(b, a);
}

// Poly

Poly Poly::constant(Family family, const Rational &c)
{
    Poly p(family);
    p.add_term(ExponentVector{}, c);
    return p;
}

Poly Poly::variable(Family family, std::size_t index)
{
    if (family == Family::L && index == 0) {
        throw DomainError("lambda variables are indexed from 1");
    }
    return monomial(family, ExponentVector::single(index));
}

Poly Poly::monomial(Family family, const ExponentVector &e, const Rational &c)
{
    if (family == Family::L && e[0] != 0) {
        throw DomainError("lambda variables are indexed from 1");
    }
    Poly p(family);
    p.add_term(e, c);
    return p;
}

Rational Poly::coefficient(const ExponentVector &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const ExponentVector &e, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

std::size_t Poly::extent() const
{
    std::size_t n = 0;
    for (const auto &[e, c] : terms_) {
        n = std::max(n, e.extent());
    }
    return n;
}

std::uint64_t Poly::total_degree() const
{
    // Canonical order puts the highest degree first.
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Poly::require_same_family(const Poly &other) const
{
    if (family_ != other.family_) {
        throw FamilyMismatchError(std::string("family mismatch: ") + family_name(family_) + " vs "
                                  + family_name(other.family_));
    }
}

Poly &Poly::operator+=(const Poly &other)
{
    require_same_family(other);
    for (const auto &[e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

Poly &Poly::operator-=(const Poly &other)
{
    require_same_family(other);
    for (const auto &[e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
    a.require_same_family(b);
    Poly out(a.family_);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

Poly &Poly::operator*=(const Poly &other)
{
    *this = *this * other;
    return *this;
}

Poly &Poly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto &[e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Poly Poly::pow(unsigned e) const
{
    Poly result = constant(family_, 1);
    Poly base = *this;
    while (e != 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

Poly Poly::divide_by_monomial(const ExponentVector &e) const
{
    Poly out(family_);
    for (const auto &[t, c] : terms_) {
        if (!e.divides(t)) {
            throw InternalError("polynomial is not divisible by the requested monomial");
        }
        out.terms_.emplace(t - e, c);
    }
    return out;
}

bool Poly::all_integer() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto &t) { return t.second.get_den() == 1; });
}

Poly Poly::primitive_part() const
{
    if (terms_.empty()) {
        return *this;
    }
    // Clear denominators, then remove the content.
    Integer l = 1;
    for (const auto &[e, c] : terms_) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Integer g = 0;
    for (const auto &[e, c] : terms_) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    if (terms_.begin()->second < 0) {
        scale = -scale;
    }
    return *this * scale;
}

std::string rational_to_string(const Rational &q)
{
    return q.get_str();
}

namespace
{

void write_monomial(std::ostream &os, Family family, const ExponentVector &e)
{
    bool first = true;
    for (const auto &[i, x] : e.entries()) {
        if (!first) {
            os << '*';
        }
        first = false;
        os << family_name(family) << i;
        if (x != 1) {
            os << '^' << x;
        }
    }
}

} // namespace

std::string Poly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e.empty()) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << '*';
        }
        write_monomial(os, family_, e);
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Poly &p)
{
    return os << p.to_string();
}

BiDegree bidegree(const Poly &p)
{
    if (p.is_zero()) {
        throw DomainError("the zero polynomial has no bidegree");
    }
    const auto &first = *p.terms().begin();
    BiDegree bd{first.first.degree(), first.first.weight()};
    for (const auto &[e, c] : p.terms()) {
        if (e.degree() != bd.degree || e.weight() != bd.weight) {
            const bool deg = e.degree() != bd.degree;
            throw InhomogeneousError(
                std::string(deg ? "mixed degree" : "mixed weight") + " in polynomial",
                Poly::monomial(p.family(), first.first, first.second).to_string(),
                Poly::monomial(p.family(), e, c).to_string());
        }
    }
    return bd;
}

Poly substitute(const Poly &p, std::size_t index, const Poly &replacement)
{
    if (replacement.family() != p.family()) {
        bool is_constant = replacement.is_zero()
                           || (replacement.size() == 1 && replacement.terms().begin()->first.empty());
        if (!is_constant) {
            throw FamilyMismatchError("substitution replacement is in a different family");
        }
    }
    Poly repl(p.family());
    for (const auto &[e, c] : replacement.terms()) {
        repl.add_term(e, c);
    }

    // Group terms by the power of the substituted variable so each power is computed once.
    std::map<std::uint32_t, Poly> by_power;
    for (const auto &[e, c] : p.terms()) {
        auto [it, _] = by_power.try_emplace(e[index], Poly(p.family()));
        it->second.add_term(e.with(index, 0), c);
    }
    Poly out(p.family());
    Poly power = Poly::constant(p.family(), 1);
    std::uint32_t current = 0;
    for (const auto &[k, rest] : by_power) {
        while (current < k) {
            power *= repl;
            ++current;
        }
        out += rest * power;
    }
    return out;
}

// Parsing

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) {
        throw ParseError("empty rational");
    }
    auto valid = [](const std::string &part) {
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i >= part.size()) {
            return false;
        }
        return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                           [](unsigned char ch) { return std::isdigit(ch); });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (num.empty() || den.empty() || !valid(num) || !valid(den)) {
        throw ParseError("malformed rational '" + s + "'");
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    Integer d(den);
    if (d == 0) {
        throw ParseError("zero denominator in '" + s + "'");
    }
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

namespace
{

class TextParser
{
public:
    TextParser(std::string_view text, Family fallback) : text_(text), fallback_(fallback) {}

    Poly parse()
    {
        std::vector<std::pair<ExponentVector, Rational>> terms;
        skip_ws();
        if (at_end()) {
            throw ParseError("empty polynomial text");
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [e, c] = parse_term();
            terms.emplace_back(std::move(e), sign * c);
            skip_ws();
        }
        Poly p(family_.value_or(fallback_));
        for (const auto &[e, c] : terms) {
            if (p.family() == Family::L && e[0] != 0) {
                fail("L0 is not a valid variable");
            }
            p.add_term(e, c);
        }
        return p;
    }

private:
    std::pair<ExponentVector, Rational> parse_term()
    {
        Rational coeff = 1;
        ExponentVector e;
        bool any = false;
        while (true) {
            skip_ws();
            if (at_end()) {
                fail("unexpected end of input");
            }
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::size_t start = pos_;
                while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
                    ++pos_;
                }
                coeff *= parse_rational(text_.substr(start, pos_ - start));
            } else if (peek() == 'a' || peek() == 'L') {
                Family f = peek() == 'a' ? Family::A : Family::L;
                if (family_ && *family_ != f) {
                    throw FamilyMismatchError("polynomial text mixes a- and L-variables");
                }
                family_ = f;
                ++pos_;
                std::size_t index = parse_uint("variable index");
                std::uint32_t exponent = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    exponent = static_cast<std::uint32_t>(parse_uint("exponent"));
                }
                e = e + ExponentVector::single(index, exponent);
            } else {
                fail("unexpected character");
            }
            any = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) {
            fail("empty term");
        }
        return {e, coeff};
    }

    std::size_t parse_uint(const char *what)
    {
        std::size_t start = pos_;
        std::size_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::size_t>(peek() - '0');
            ++pos_;
        }
        if (pos_ == start) {
            fail(std::string("expected ") + what);
        }
        return v;
    }

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    bool at_end() const
    {
        return pos_ >= text_.size();
    }
    char peek() const
    {
        return text_[pos_];
    }

    std::string_view text_;
    Family fallback_;
    std::optional<Family> family_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, Family fallback)
{
    return TextParser(text, fallback).parse();
}

} // namespace perpetuants
