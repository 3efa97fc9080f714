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
 * @file field.hpp
 * @brief Exact coefficient fields: the rationals (arbitrary precision) and prime fields F_p.
 *
 * A `Scalar` carries its `FieldSpec`, so mixing elements of different fields is detected at
 * run time rather than silently producing garbage. Rationals are kept in lowest terms with a
 * positive denominator (GMP canonical form); residues are kept in [0, p).
 */

#ifndef CREMONA_FIELD_HPP
#define CREMONA_FIELD_HPP

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "cremona/error.hpp"

namespace cremona {

class FieldSpec {
   public:
    enum class Kind { Rationals, PrimeField };

    /// The field Q.
    constexpr FieldSpec() = default;

    static constexpr FieldSpec rationals() { return FieldSpec(); }

    /// F_p. Primality is checked by trial division; p must fit in 32 bits so that
    /// residue products fit in 64.
    static FieldSpec prime_field(std::uint64_t p) {
        if (p >= (std::uint64_t{1} << 32)) throw ContractViolation("prime modulus must be < 2^32");
        if (!is_prime(p)) throw ContractViolation("modulus " + std::to_string(p) + " is not prime");
        FieldSpec f;
        f.kind_ = Kind::PrimeField;
        f.p_ = p;
        return f;
    }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
    constexpr bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
    /// 0 for Q.
    constexpr std::uint64_t characteristic() const noexcept { return p_; }

    std::string to_string() const { return is_rationals() ? "Q" : "Fp=" + std::to_string(p_); }

    /// Accepts "Q" or "Fp=<p>".
    static FieldSpec parse(std::string_view text) {
        if (text == "Q") return rationals();
        if (text.substr(0, 3) == "Fp=" && text.size() > 3) {
            std::uint64_t p = 0;
            for (std::size_t i = 3; i < text.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("bad prime in field selector", i);
                p = p * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (p >= (std::uint64_t{1} << 32)) throw ParseError("prime too large", i);
            }
            return prime_field(p);
        }
        throw ParseError("field selector must be Q or Fp=<p>", 0);
    }

    static constexpr bool is_prime(std::uint64_t p) noexcept {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    friend constexpr bool operator==(const FieldSpec&, const FieldSpec&) = default;

   private:
    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
};

class Scalar {
   public:
    /// Zero of Q.
    Scalar() : value_(mpq_class(0)) {}

    Scalar(const FieldSpec& spec, long value) : spec_(spec) {
        if (spec.is_rationals())
            value_ = mpq_class(value);
        else
            value_ = reduce(mpz_class(value));
    }

    Scalar(const FieldSpec& spec, const mpq_class& value) : spec_(spec) {
        if (spec.is_rationals()) {
            mpq_class v = value;
            v.canonicalize();
            value_ = std::move(v);
        } else {
            std::uint64_t num = reduce(value.get_num());
            std::uint64_t den = reduce(value.get_den());
            if (den == 0) throw DivisionByZero("denominator vanishes modulo " + std::to_string(p()));
            value_ = mulmod(num, invmod(den));
        }
    }

    static Scalar zero(const FieldSpec& spec) { return Scalar(spec, 0L); }
    static Scalar one(const FieldSpec& spec) { return Scalar(spec, 1L); }

    /// Rationals as "a/b" or "a"; residues as decimal integers (also "a/b", read as a * b^-1),
    /// reduced on parse. An optional leading sign is accepted.
    static Scalar parse(std::string_view text, const FieldSpec& spec) {
        std::size_t pos = 0;
        Scalar s = parse_prefix(text, pos, spec);
        if (pos != text.size()) throw ParseError("trailing characters in scalar", pos);
        return s;
    }

    /// Parses a scalar starting at `pos` and advances it. A '/' is only consumed when a digit
    /// follows it.
    static Scalar parse_prefix(std::string_view text, std::size_t& pos, const FieldSpec& spec) {
        const std::size_t start = pos;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        auto digits = [&](std::size_t& at) {
            std::size_t b = at;
            while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) ++at;
            if (b == at) throw ParseError("malformed coefficient", at);
            return mpz_class(std::string(text.substr(b, at - b)));
        };
        mpz_class num = digits(pos);
        mpz_class den = 1;
        if (pos + 1 < text.size() && text[pos] == '/' &&
            std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
            ++pos;
            std::size_t den_pos = pos;
            den = digits(pos);
            if (den == 0) throw ParseError("zero denominator", den_pos);
        }
        if (negative) num = -num;
        try {
            return Scalar(spec, mpq_class(num, den));
        } catch (const DivisionByZero&) {
            throw ParseError("denominator vanishes in the field", start);
        }
    }

    const FieldSpec& spec() const noexcept { return spec_; }

    bool is_zero() const noexcept {
        if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
        return std::get<std::uint64_t>(value_) == 0;
    }
    bool is_one() const noexcept {
        if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
        return std::get<std::uint64_t>(value_) == 1;
    }

    /// Only meaningful over Q.
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    /// Only meaningful over F_p.
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

    /// True over Q for integral values; always true over F_p (every residue is an integer image).
    bool is_integer() const {
        if (spec_.is_prime_field()) return true;
        return rational().get_den() == 1;
    }

    Scalar operator-() const {
        Scalar r = *this;
        if (auto* q = std::get_if<mpq_class>(&r.value_))
            *q = -*q;
        else {
            auto& v = std::get<std::uint64_t>(r.value_);
            v = v == 0 ? 0 : p() - v;
        }
        return r;
    }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero("inversion of zero");
        Scalar r = *this;
        if (auto* q = std::get_if<mpq_class>(&r.value_))
            *q = 1 / *q;
        else
            std::get<std::uint64_t>(r.value_) = invmod(std::get<std::uint64_t>(value_));
        return r;
    }

    /// Exact power; negative exponents invert.
    Scalar pow(long long k) const {
        if (k < 0) {
            if (is_zero()) throw DivisionByZero("zero raised to a negative power");
            return inverse().pow(-k);
        }
        Scalar result = one(spec_);
        Scalar base = *this;
        auto e = static_cast<unsigned long long>(k);
        while (e != 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e != 0) base *= base;
        }
        return result;
    }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        if (auto* q = std::get_if<mpq_class>(&value_))
            *q += o.rational();
        else {
            auto& v = std::get<std::uint64_t>(value_);
            v = (v + o.residue()) % p();
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    Scalar& operator*=(const Scalar& o) {
        check(o);
        if (auto* q = std::get_if<mpq_class>(&value_))
            *q *= o.rational();
        else {
            auto& v = std::get<std::uint64_t>(value_);
            v = mulmod(v, o.residue());
        }
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        check(o);
        return *this *= o.inverse();
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.spec_ == b.spec_ && a.value_ == b.value_;
    }

    /// Canonical text: "a/b", "a", or the residue.
    std::string to_string() const {
        if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
        return std::to_string(std::get<std::uint64_t>(value_));
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

   private:
    std::uint64_t p() const noexcept { return spec_.characteristic(); }

    void check(const Scalar& o) const {
        if (!(spec_ == o.spec_))
            throw FieldMismatch("scalar field mismatch: " + spec_.to_string() + " vs " + o.spec_.to_string());
    }

    std::uint64_t reduce(const mpz_class& v) const {
        mpz_class m = v % mpz_class(static_cast<unsigned long>(p()));
        if (m < 0) m += static_cast<unsigned long>(p());
        return m.get_ui();
    }

    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % p(); }

    std::uint64_t invmod(std::uint64_t a) const {
        if (a == 0) throw DivisionByZero("inversion of zero");
        // Fermat: a^(p-2).
        std::uint64_t result = 1;
        std::uint64_t base = a;
        std::uint64_t e = p() - 2;
        while (e != 0) {
            if (e & 1U) result = mulmod(result, base);
            base = mulmod(base, base);
            e >>= 1U;
        }
        return result;
    }

    FieldSpec spec_;
    std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace cremona

#endif
