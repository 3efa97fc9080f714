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
 * @file gcd.hpp
 * @brief Exact division and greatest common divisors of multivariate polynomials.
 *
 * The gcd is computed recursively: split off contents with respect to a main variable (the
 * lowest-index variable present), then run a subresultant polynomial remainder sequence on the
 * primitive parts with coefficients in the ring of the remaining variables. The univariate case
 * over the base field uses the plain Euclidean algorithm.
 */

#ifndef CREMONA_GCD_HPP
#define CREMONA_GCD_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/poly.hpp"

namespace cremona {

/// Quotient of an exact division, or nullopt when `d` does not divide `p`.
inline std::optional<Polynomial> try_divexact(const Polynomial& p, const Polynomial& d) {
    p.check(d);
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (d.is_constant()) return p.scaled(d.leading_coeff().inverse());
    const Scalar lc_inv = d.leading_coeff().inverse();
    const Monomial& lm = d.leading_monomial();
    std::vector<Term> quotient;
    Polynomial rem = p;
    while (!rem.is_zero()) {
        if (!lm.divides(rem.leading_monomial())) return std::nullopt;
        Scalar c = rem.leading_coeff() * lc_inv;
        Monomial m = rem.leading_monomial() / lm;
        rem -= d.times_term(c, m);
        quotient.push_back({std::move(c), std::move(m)});
    }
    return Polynomial::from_terms(p.spec(), p.nvars(), std::move(quotient));
}

/// Exact quotient p / d. Throws InexactDivision if d does not divide p.
inline Polynomial divexact(const Polynomial& p, const Polynomial& d) {
    auto q = try_divexact(p, d);
    if (!q) throw InexactDivision("divisor " + d.to_string() + " does not divide " + p.to_string());
    return std::move(*q);
}

namespace detail {

// A polynomial viewed in R[v], R = F[other variables]; c[i] multiplies v^i, top entry nonzero.
using Dense = std::vector<Polynomial>;

inline void trim(Dense& a) {
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
}

inline int deg(const Dense& a) { return (a.size() == 1 && a[0].is_zero()) ? -1 : static_cast<int>(a.size()) - 1; }

inline bool only_mentions(const Polynomial& p, std::size_t var) {
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (i != var && t.mono[i] != 0) return false;
    return true;
}

inline Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b);

inline Polynomial content(const Dense& coeffs) {
    Polynomial g = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
        if (g.is_constant()) break;
        if (!it->is_zero()) g = gcd_nonzero(g, *it);
    }
    return g.is_constant() ? g.one_like() : g.monic();
}

/// lc(b)^(deg a - deg b + 1) * a mod b, exactly.
inline Dense pseudo_remainder(Dense a, const Dense& b) {
    const int db = deg(b);
    int e = deg(a) - db + 1;
    const Polynomial& lb = b.back();
    while (deg(a) >= db) {
        Polynomial la = a.back();
        const std::size_t shift = static_cast<std::size_t>(deg(a) - db);
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        a.pop_back();
        if (a.empty()) a.push_back(b.front().zero_like());
        trim(a);
        --e;
        if (deg(a) < 0) break;
    }
    if (e > 0 && deg(a) >= 0) {
        Polynomial f = lb.pow(static_cast<std::uint32_t>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

/// Monic gcd of two univariate polynomials over the base field (both only mention `var`).
inline Polynomial euclid(Polynomial a, Polynomial b, std::size_t var) {
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero()) {
        Dense r = a.coefficients_in(var);
        const Dense bd = b.coefficients_in(var);
        const Scalar lb_inv = bd.back().leading_coeff().inverse();
        const int db = deg(bd);
        while (deg(r) >= db) {
            Scalar q = r.back().leading_coeff() * lb_inv;
            const std::size_t shift = static_cast<std::size_t>(deg(r) - db);
            for (std::size_t i = 0; i < bd.size(); ++i) r[i + shift] -= bd[i].scaled(q);
            r.pop_back();
            if (r.empty()) r.push_back(a.zero_like());
            trim(r);
            if (deg(r) < 0) break;
        }
        a = std::move(b);
        b = Polynomial::from_coefficients(r, var);
    }
    return a.monic();
}

/// Subresultant PRS on polynomials primitive in `var` with positive degree in it.
inline Polynomial subresultant_gcd(const Polynomial& pa, const Polynomial& pb, std::size_t var) {
    Dense a = pa.coefficients_in(var);
    Dense b = pb.coefficients_in(var);
    if (deg(a) < deg(b)) std::swap(a, b);
    Polynomial g = pa.one_like();
    Polynomial h = pa.one_like();
    for (;;) {
        const int delta = deg(a) - deg(b);
        Dense r = pseudo_remainder(a, b);
        if (deg(r) < 0) break;
        if (deg(r) == 0) return pa.one_like();
        a = std::move(b);
        Polynomial divisor = g * h.pow(static_cast<std::uint32_t>(delta));
        for (auto& c : r) c = divexact(c, divisor);
        b = std::move(r);
        g = a.back();
        if (delta > 0) h = divexact(g.pow(static_cast<std::uint32_t>(delta)), h.pow(static_cast<std::uint32_t>(delta - 1)));
    }
    Polynomial c = content(b);
    Polynomial last = Polynomial::from_coefficients(b, var);
    return c.is_one() ? last : divexact(last, c);
}

inline Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b) {
    if (a.is_constant() || b.is_constant()) return a.one_like();
    std::size_t var = 0;
    while (!a.mentions(var) && !b.mentions(var)) ++var;
    if (only_mentions(a, var) && only_mentions(b, var)) return euclid(a, b, var);

    const Dense ac = a.coefficients_in(var);
    const Dense bc = b.coefficients_in(var);
    Polynomial ca = content(ac);
    Polynomial cb = content(bc);
    Polynomial c = gcd_nonzero(ca, cb);
    if (deg(ac) == 0 || deg(bc) == 0) return c.monic();
    Polynomial pa = ca.is_one() ? a : divexact(a, ca);
    Polynomial pb = cb.is_one() ? b : divexact(b, cb);
    return (c * subresultant_gcd(pa, pb, var)).monic();
}

}  // namespace detail

/// Greatest common divisor, normalized to graded-lex leading coefficient 1.
inline Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    p.check(q);
    if (p.is_zero() && q.is_zero()) throw ContractViolation("gcd of two zero polynomials");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    return detail::gcd_nonzero(p, q).monic();
}

/// Monic least common multiple of two nonzero polynomials.
inline Polynomial lcm(const Polynomial& p, const Polynomial& q) {
    return (divexact(p, gcd(p, q)) * q).monic();
}

}  // namespace cremona

#endif
