/*
   Copyright 2026 The cremona Authors

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

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over a `FieldSpec`, kept in canonical form.
 *
 * Terms are stored in decreasing graded-lexicographic order with x0 > x1 > ... and no zero
 * coefficients, so two polynomials are equal iff their term vectors are equal. Affine
 * polynomials in x1..xn live in the same ring as their homogenizations; they simply do not
 * mention x0.
 */

#ifndef CREMONA_POLY_HPP
#define CREMONA_POLY_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"

namespace cremona {

class Monomial {
   public:
    explicit Monomial(std::size_t nvars = 0) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        degree_ = std::accumulate(exps_.begin(), exps_.end(), 0U);
    }

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
        Monomial m(nvars);
        m.exps_[index] = power;
        m.degree_ = power;
        return m;
    }

    std::size_t nvars() const noexcept { return exps_.size(); }
    std::uint32_t total_degree() const noexcept { return degree_; }
    std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    void set(std::size_t i, std::uint32_t e) {
        degree_ = degree_ - exps_[i] + e;
        exps_[i] = e;
    }

    bool divides(const Monomial& o) const noexcept {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    /// Requires `d.divides(*this)`.
    Monomial operator/(const Monomial& d) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= d.exps_[i];
        r.degree_ -= d.degree_;
        return r;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        r.degree_ += o.degree_;
        return r;
    }

    bool operator==(const Monomial& o) const noexcept { return exps_ == o.exps_; }

    /// Graded lex: total degree first, then lexicographic with x0 largest.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.exps_ <=> b.exps_;
    }

   private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

struct Term {
    Scalar coeff;
    Monomial mono;

    bool operator==(const Term&) const = default;
};

class Polynomial {
   public:
    Polynomial() = default;

    /// The zero polynomial of F[x0, ..., x_{nvars-1}].
    Polynomial(const FieldSpec& spec, std::size_t nvars) : spec_(spec), nvars_(nvars) {}

    /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(const FieldSpec& spec, std::size_t nvars, std::vector<Term> terms) {
        Polynomial p(spec, nvars);
        for (const auto& t : terms) {
            if (t.mono.nvars() != nvars) throw FieldMismatch("monomial has the wrong number of variables");
            if (!(t.coeff.spec() == spec)) throw FieldMismatch("coefficient field mismatch");
        }
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    static Polynomial constant(const FieldSpec& spec, std::size_t nvars, const Scalar& c) {
        Polynomial p(spec, nvars);
        if (!c.is_zero()) p.terms_.push_back({c, Monomial(nvars)});
        return p;
    }

    static Polynomial one(const FieldSpec& spec, std::size_t nvars) {
        return constant(spec, nvars, Scalar::one(spec));
    }

    static Polynomial variable(const FieldSpec& spec, std::size_t nvars, std::size_t index,
                               std::uint32_t power = 1) {
        if (index >= nvars) throw ContractViolation("variable index out of range");
        Polynomial p(spec, nvars);
        p.terms_.push_back({Scalar::one(spec), Monomial::variable(nvars, index, power)});
        return p;
    }

    /// c0 + c1*x_v + c2*x_v^2 + ..., coefficients must not mention x_v.
    static Polynomial from_coefficients(std::span<const Polynomial> coeffs, std::size_t var) {
        Polynomial r = coeffs.front().zero_like();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            Polynomial shifted = coeffs[i];
            for (auto& t : shifted.terms_) t.mono.set(var, t.mono[var] + static_cast<std::uint32_t>(i));
            r += shifted;
        }
        return r;
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total_degree() == 0); }
    bool is_one() const noexcept { return is_constant() && !is_zero() && terms_[0].coeff.is_one(); }

    Polynomial zero_like() const { return Polynomial(spec_, nvars_); }
    Polynomial one_like() const { return one(spec_, nvars_); }

    /// -1 for the zero polynomial.
    int total_degree() const noexcept {
        return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.total_degree());
    }

    /// -1 for the zero polynomial.
    int degree_in(std::size_t var) const noexcept {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
        return d;
    }

    bool mentions(std::size_t var) const noexcept { return degree_in(var) > 0; }

    /// All monomials share one total degree. The zero polynomial counts as homogeneous.
    bool is_homogeneous() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
            return t.mono.total_degree() == terms_.front().mono.total_degree();
        });
    }

    /// Requires a nonzero polynomial.
    const Scalar& leading_coeff() const { return terms_.front().coeff; }
    const Monomial& leading_monomial() const { return terms_.front().mono; }

    /// Scaled so the graded-lex leading coefficient is 1; zero stays zero.
    Polynomial monic() const {
        if (is_zero() || leading_coeff().is_one()) return *this;
        return scaled(leading_coeff().inverse());
    }

    Polynomial scaled(const Scalar& c) const {
        if (c.is_zero()) return zero_like();
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    /// Coefficients of this polynomial viewed in F[other vars][x_var]; entry i multiplies x_var^i.
    std::vector<Polynomial> coefficients_in(std::size_t var) const {
        std::vector<Polynomial> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, zero_like());
        for (const auto& t : terms_) {
            Term stripped = t;
            stripped.mono.set(var, 0);
            out[t.mono[var]].terms_.push_back(std::move(stripped));
        }
        // Stripping one variable preserves the relative grlex order only within a fixed power.
        for (auto& c : out) c.canonicalize();
        return out;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() && b != o.terms_.end()) {
            auto c = a->mono <=> b->mono;
            if (c > 0) {
                merged.push_back(std::move(*a++));
            } else if (c < 0) {
                merged.push_back(*b++);
            } else {
                Scalar s = a->coeff + b->coeff;
                if (!s.is_zero()) merged.push_back({std::move(s), std::move(a->mono)});
                ++a;
                ++b;
            }
        }
        std::move(a, terms_.end(), std::back_inserter(merged));
        std::copy(b, o.terms_.end(), std::back_inserter(merged));
        terms_ = std::move(merged);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r = a.zero_like();
        if (a.is_zero() || b.is_zero()) return r;
        r.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) r.terms_.push_back({s.coeff * t.coeff, s.mono * t.mono});
        r.canonicalize();
        return r;
    }

    Polynomial pow(std::uint32_t k) const {
        Polynomial result = one_like();
        Polynomial base = *this;
        while (k != 0) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k != 0) base *= base;
        }
        return result;
    }

    /// Multiplies by the single term c * m.
    Polynomial times_term(const Scalar& c, const Monomial& m) const {
        Polynomial r = *this;
        for (auto& t : r.terms_) {
            t.coeff *= c;
            t.mono = t.mono * m;
        }
        return r;
    }

    Scalar eval(std::span<const Scalar> point) const {
        if (point.size() != nvars_) throw ContractViolation("evaluation point has the wrong length");
        Scalar acc = Scalar::zero(spec_);
        for (const auto& t : terms_) {
            Scalar v = t.coeff;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (t.mono[i] != 0) v *= point[i].pow(t.mono[i]);
            acc += v;
        }
        return acc;
    }

    /// Replaces x_i by args[i]. The result lives in the ring of the arguments.
    Polynomial substitute(std::span<const Polynomial> args) const {
        if (args.size() != nvars_) throw ContractViolation("substitution needs one polynomial per variable");
        for (const auto& a : args) args.front().check(a);
        const Polynomial& proto = args.front();
        if (!(proto.spec_ == spec_)) throw FieldMismatch("substitution field mismatch");
        // powers[i][e] = args[i]^e, filled on demand
        std::vector<std::vector<Polynomial>> powers(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            powers[i].push_back(proto.one_like());
            std::uint32_t emax = static_cast<std::uint32_t>(std::max(degree_in(i), 0));
            for (std::uint32_t e = 1; e <= emax; ++e) powers[i].push_back(powers[i].back() * args[i]);
        }
        Polynomial r = proto.zero_like();
        for (const auto& t : terms_) {
            Polynomial v = Polynomial::constant(spec_, proto.nvars_, t.coeff);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (t.mono[i] != 0) v *= powers[i][t.mono[i]];
            r += v;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return spec_ == o.spec_ && nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    /// Graded-lex order, "+"/"-" separated, coefficient 1 and exponent 1 omitted.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            Scalar c = t.coeff;
            bool negative = spec_.is_rationals() && sgn(c.rational()) < 0;
            if (negative) c = -c;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            bool wrote = false;
            if (!c.is_one() || t.mono.total_degree() == 0) {
                out += c.to_string();
                wrote = true;
            }
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (t.mono[i] == 0) continue;
                if (wrote) out += '*';
                out += 'x' + std::to_string(i);
                if (t.mono[i] != 1) out += '^' + std::to_string(t.mono[i]);
                wrote = true;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

    /// Re-sorts and merges; idempotent on canonical input.
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
        terms_ = std::move(out);
    }

    void check(const Polynomial& o) const {
        if (!(spec_ == o.spec_)) throw FieldMismatch("polynomial field mismatch");
        if (nvars_ != o.nvars_) throw FieldMismatch("polynomial variable count mismatch");
    }

   private:
    FieldSpec spec_;
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

/// Degree-d homogenization with respect to x0. `p` must not mention x0 and d >= deg p.
inline Polynomial homogenize(const Polynomial& p, int d) {
    if (p.mentions(0)) throw ContractViolation("homogenize expects a polynomial in x1..xn");
    if (d < p.total_degree()) throw ContractViolation("homogenization degree below polynomial degree");
    std::vector<Term> terms = p.terms();
    for (auto& t : terms) t.mono.set(0, static_cast<std::uint32_t>(d) - t.mono.total_degree());
    return Polynomial::from_terms(p.spec(), p.nvars(), std::move(terms));
}

/// Sets x0 = 1.
inline Polynomial dehomogenize(const Polynomial& p) {
    std::vector<Term> terms = p.terms();
    for (auto& t : terms) t.mono.set(0, 0);
    return Polynomial::from_terms(p.spec(), p.nvars(), std::move(terms));
}

namespace detail {

class PolyParser {
   public:
    PolyParser(std::string_view text, const FieldSpec& spec, std::size_t nvars)
        : text_(text), spec_(spec), nvars_(nvars) {}

    std::size_t pos = 0;

    /// expression := ['+'|'-'] term (('+'|'-') term)*. Stops before any other character.
    Polynomial expression() {
        Polynomial acc(spec_, nvars_);
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos;
        }
        for (;;) {
            Polynomial t = term();
            acc += negative ? -t : t;
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            negative = peek() == '-';
            ++pos;
        }
        return acc;
    }

    void skip_ws() {
        while (pos < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos]))) ++pos;
    }

    char peek() const { return pos < text_.size() ? text_[pos] : '\0'; }

   private:
    // term := coeff ('*' factor)* | factor ('*' factor)*
    Polynomial term() {
        skip_ws();
        Scalar coeff = Scalar::one(spec_);
        Monomial mono(nvars_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Scalar::parse_prefix(text_, pos, spec_);
        } else {
            factor(mono);
        }
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos;
            factor(mono);
        }
        return Polynomial::from_terms(spec_, nvars_, {Term{coeff, mono}});
    }

    // factor := var ('^' uint)?, var := 'x' uint
    void factor(Monomial& mono) {
        skip_ws();
        if (peek() != 'x') throw ParseError("expected variable", pos);
        ++pos;
        std::size_t at = pos;
        std::uint64_t index = uint_literal();
        if (index >= nvars_) throw ParseError("variable index out of range", at);
        std::uint64_t e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            e = uint_literal();
        }
        mono.set(index, mono[index] + static_cast<std::uint32_t>(e));
    }

    std::uint64_t uint_literal() {
        std::size_t b = pos;
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > 1'000'000) throw ParseError("integer too large", b);
            ++pos;
        }
        if (b == pos) throw ParseError("expected unsigned integer", pos);
        return v;
    }

    std::string_view text_;
    FieldSpec spec_;
    std::size_t nvars_;
};

}  // namespace detail

/// Parses the whole of `text` as a polynomial in x0..x_{nvars-1}.
inline Polynomial parse_poly(std::string_view text, const FieldSpec& spec, std::size_t nvars) {
    detail::PolyParser parser(text, spec, nvars);
    Polynomial p = parser.expression();
    parser.skip_ws();
    if (parser.pos != text.size()) throw ParseError("unexpected character", parser.pos);
    return p;
}

}  // namespace cremona

#endif
