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
 * @file families.hpp
 * @brief Two one-parameter-style families in Bir(P^n), n >= 2, and everything known about them.
 *
 * Unipotent family, in the chart x0 = 1:
 *
 *     rho(t): (x1, ..., xn) -> (x1 + 1, x2 (x1 + t) / x1, x3, ..., xn)
 *
 * Semi-simple family:
 *
 *     rho(a, xi): (x1, ..., xn) -> (xi x1, x2 (x1 + a) / (x1 + 1), x3, ..., xn),  xi != 0
 *
 * rho(t) is algebraic iff t lies in the additive subgroup generated by 1 (an integer over Q,
 * anything over F_p); rho(a, xi) is algebraic iff a = xi^k for some integer k. In the algebraic
 * cases the iterate degrees are bounded by |k| + 1 and explicit conjugators to the normal forms
 * rho(0) and rho(1, xi) exist.
 */

#ifndef CREMONA_FAMILIES_HPP
#define CREMONA_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/poly.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

inline constexpr long kDefaultKMax = 64;

struct UnipotentParam {
    std::size_t n;
    Scalar t;
};

struct SemisimpleParam {
    std::size_t n;
    Scalar a;
    Scalar xi;
};

/// A map together with its inverse.
struct MapPair {
    RationalMap map;
    RationalMap inverse;
};

struct ParamClassification {
    enum class Verdict { Algebraic, NotAlgebraic, SearchExhausted };

    Verdict verdict = Verdict::NotAlgebraic;
    long long k = 0;                     // Algebraic only
    std::optional<MapPair> conjugator;   // Algebraic only; conjugates the family map to its normal form
    long k_max = 0;                      // SearchExhausted only

    std::string verdict_name() const {
        switch (verdict) {
            case Verdict::Algebraic: return "Algebraic";
            case Verdict::NotAlgebraic: return "NotAlgebraic";
            case Verdict::SearchExhausted: break;
        }
        return "SearchExhausted";
    }
};

namespace detail {

class Ring {
   public:
    Ring(const FieldSpec& spec, std::size_t n) : spec_(spec), nvars_(n + 1) {}

    Polynomial x(std::size_t i) const { return Polynomial::variable(spec_, nvars_, i); }
    Polynomial c(const Scalar& s) const { return Polynomial::constant(spec_, nvars_, s); }
    Polynomial c(long v) const { return c(Scalar(spec_, v)); }
    Polynomial one() const { return Polynomial::one(spec_, nvars_); }

    /// prod (x1 + offset) over the offsets.
    Polynomial linear_product(const std::vector<Scalar>& offsets) const {
        Polynomial p = one();
        for (const auto& o : offsets) p *= x(1) + c(o);
        return p;
    }

    /// (x1 : x2 * num/den : x3 : ... : xn) shape shared by every conjugator and inverse here.
    AffineMap affine(const Polynomial& first, const Polynomial& num2, const Polynomial& den2) const {
        std::vector<AffineComponent> comps{{first, one()}, {x(2) * num2, den2}};
        for (std::size_t i = 3; i < nvars_; ++i) comps.push_back({x(i), one()});
        return AffineMap::make(std::move(comps));
    }

    const FieldSpec& spec() const { return spec_; }
    std::size_t nvars() const { return nvars_; }

   private:
    FieldSpec spec_;
    std::size_t nvars_;
};

inline void check_dimension(std::size_t n) {
    if (n < 2) throw ContractViolation("the families need n >= 2");
}

/// Removes matching pairs, one from each multiset.
inline void cancel_common(std::vector<Scalar>& num, std::vector<Scalar>& den) {
    std::vector<Scalar> kept;
    for (auto& z : num) {
        auto hit = std::find(den.begin(), den.end(), z);
        if (hit != den.end())
            den.erase(hit);
        else
            kept.push_back(std::move(z));
    }
    num = std::move(kept);
}

inline std::vector<Scalar> offsets_range(const FieldSpec& spec, long lo, long hi) {
    std::vector<Scalar> out;
    for (long i = lo; i < hi; ++i) out.emplace_back(spec, i);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------------------------
// Unipotent family
// ---------------------------------------------------------------------------------------------

/// [x0 x1 : x1(x1 + x0) : x2(x1 + t x0) : x3 x1 : ... : xn x1], reduced (degree 1 at t = 0).
inline RationalMap unipotent_map(const UnipotentParam& p) {
    detail::check_dimension(p.n);
    detail::Ring r(p.t.spec(), p.n);
    std::vector<Polynomial> comps{r.x(0) * r.x(1), r.x(1) * (r.x(1) + r.x(0)), r.x(2) * (r.x(1) + r.c(p.t) * r.x(0))};
    for (std::size_t i = 3; i <= p.n; ++i) comps.push_back(r.x(i) * r.x(1));
    return RationalMap::from_components(std::move(comps));
}

/// rho(t)^m straight from the product formula
///     x2 * prod_{i<m} (x1 + t + i) / prod_{i<m} (x1 + i),
/// with the shared linear factors cancelled before homogenizing.
inline RationalMap unipotent_iterate(const UnipotentParam& p, int m) {
    detail::check_dimension(p.n);
    if (m < 1) throw ContractViolation("iterate needs m >= 1");
    const FieldSpec& spec = p.t.spec();
    detail::Ring r(spec, p.n);
    std::vector<Scalar> num;
    std::vector<Scalar> den;
    if (spec.is_rationals() && p.t.is_integer() && p.t.rational().get_num().fits_slong_p()) {
        // Offsets [k, k+m) over [0, m): the overlap is an index range.
        const long k = p.t.rational().get_num().get_si();
        const long lo = std::max(k, 0L);
        const long hi = std::min(k + m, static_cast<long>(m));
        if (lo < hi) {
            num = detail::offsets_range(spec, hi, k + m);
            auto below = detail::offsets_range(spec, k, lo);
            num.insert(num.begin(), below.begin(), below.end());
            den = detail::offsets_range(spec, 0, lo);
            auto above = detail::offsets_range(spec, hi, m);
            den.insert(den.end(), above.begin(), above.end());
        } else {
            num = detail::offsets_range(spec, k, k + m);
            den = detail::offsets_range(spec, 0, m);
        }
    } else {
        for (long i = 0; i < m; ++i) {
            num.push_back(p.t + Scalar(spec, i));
            den.emplace_back(spec, i);
        }
        detail::cancel_common(num, den);
    }
    return homogenize_affine(r.affine(r.x(1) + r.c(m), r.linear_product(num), r.linear_product(den)));
}

/// (x1 - 1, x2 (x1 - 1) / (x1 + t - 1), x3, ..., xn).
inline RationalMap unipotent_inverse(const UnipotentParam& p) {
    detail::check_dimension(p.n);
    detail::Ring r(p.t.spec(), p.n);
    const Polynomial shift = r.x(1) - r.one();
    return homogenize_affine(r.affine(shift, shift, shift + r.c(p.t)));
}

/// psi with psi o rho(k) o psi^-1 = rho(0):
///   k > 0: psi = (x1, x2 / (x1 (x1 + 1) ... (x1 + k - 1)), ...)
///   k < 0: psi = (x1, x2 (x1 - 1)(x1 - 2) ... (x1 + k), ...)
/// Over F_p, |k| < p is required.
inline MapPair unipotent_conjugator(const FieldSpec& spec, std::size_t n, long k) {
    detail::check_dimension(n);
    if (k == 0) throw ContractViolation("k = 0: rho(0) needs no conjugation");
    const long abs_k = k < 0 ? -k : k;
    if (spec.is_prime_field() && static_cast<std::uint64_t>(abs_k) >= spec.characteristic())
        throw ContractViolation("conjugator factors collide: |k| >= p");
    detail::Ring r(spec, n);
    Polynomial prod = k > 0 ? r.linear_product(detail::offsets_range(spec, 0, k))
                            : r.linear_product(detail::offsets_range(spec, k, 0));
    const Polynomial one = r.one();
    AffineMap divide = r.affine(r.x(1), one, prod);
    AffineMap multiply = r.affine(r.x(1), prod, one);
    if (k > 0) return {homogenize_affine(divide), homogenize_affine(multiply)};
    return {homogenize_affine(multiply), homogenize_affine(divide)};
}

inline RationalMap unipotent_normal_form(const FieldSpec& spec, std::size_t n) {
    return unipotent_map({n, Scalar::zero(spec)});
}

namespace detail {

inline ParamClassification algebraic(long long k, MapPair witness, const RationalMap& map, const RationalMap& normal) {
    if (!eq_up_to_scalar(conjugate(witness.map, witness.inverse, map), normal))
        throw Error("internal: conjugator does not reach the normal form");
    ParamClassification c;
    c.verdict = ParamClassification::Verdict::Algebraic;
    c.k = k;
    c.conjugator = std::move(witness);
    return c;
}

inline ParamClassification exhausted(long k_max) {
    ParamClassification c;
    c.verdict = ParamClassification::Verdict::SearchExhausted;
    c.k_max = k_max;
    return c;
}

}  // namespace detail

/// Over Q: rho(t) is algebraic iff t is an integer; integers with |t| > k_max are reported as
/// SearchExhausted because no witness is built for them. Over F_p every t is algebraic, with k
/// the least non-negative representative. Algebraic verdicts carry a checked conjugator.
inline ParamClassification unipotent_classify(const UnipotentParam& p, long k_max = kDefaultKMax) {
    if (k_max < 1) throw ContractViolation("k_max must be >= 1");
    const FieldSpec& spec = p.t.spec();
    long k = 0;
    if (spec.is_prime_field()) {
        k = static_cast<long>(p.t.residue());
    } else {
        if (!p.t.is_integer()) return {};
        const mpz_class& z = p.t.rational().get_num();
        if (abs(z) > k_max) return detail::exhausted(k_max);
        k = z.get_si();
    }
    const RationalMap map = unipotent_map(p);
    const RationalMap normal = unipotent_normal_form(spec, p.n);
    MapPair witness = k == 0 ? MapPair{RationalMap::identity(spec, p.n), RationalMap::identity(spec, p.n)}
                             : unipotent_conjugator(spec, p.n, k);
    return detail::algebraic(k, std::move(witness), map, normal);
}

// ---------------------------------------------------------------------------------------------
// Semi-simple family
// ---------------------------------------------------------------------------------------------

/// [x0(x1 + x0) : xi x1(x1 + x0) : x2(x1 + a x0) : x3(x1 + x0) : ... : xn(x1 + x0)], reduced
/// (the linear map (x0 : xi x1 : x2 : ...) at a = 1).
inline RationalMap semisimple_map(const SemisimpleParam& p) {
    detail::check_dimension(p.n);
    if (p.xi.is_zero()) throw ContractViolation("xi must be nonzero");
    detail::Ring r(p.a.spec(), p.n);
    const Polynomial l = r.x(1) + r.x(0);
    std::vector<Polynomial> comps{r.x(0) * l, r.c(p.xi) * r.x(1) * l, r.x(2) * (r.x(1) + r.c(p.a) * r.x(0))};
    for (std::size_t i = 3; i <= p.n; ++i) comps.push_back(r.x(i) * l);
    return RationalMap::from_components(std::move(comps));
}

/// rho(a, xi)^m from the product formula
///     x2 * prod_{i<m} (xi^i x1 + a) / prod_{i<m} (xi^i x1 + 1).
/// Each factor is xi^i (x1 + a xi^-i), so after removing the common scalar the cancellation is
/// a multiset intersection of the offsets a xi^-i and xi^-i.
inline RationalMap semisimple_iterate(const SemisimpleParam& p, int m) {
    detail::check_dimension(p.n);
    if (p.xi.is_zero()) throw ContractViolation("xi must be nonzero");
    if (m < 1) throw ContractViolation("iterate needs m >= 1");
    detail::Ring r(p.a.spec(), p.n);
    const Scalar xi_inv = p.xi.inverse();
    std::vector<Scalar> num;
    std::vector<Scalar> den;
    Scalar w = Scalar::one(p.a.spec());
    for (int i = 0; i < m; ++i) {
        num.push_back(p.a * w);
        den.push_back(w);
        w *= xi_inv;
    }
    detail::cancel_common(num, den);
    return homogenize_affine(r.affine(r.c(p.xi.pow(m)) * r.x(1), r.linear_product(num), r.linear_product(den)));
}

/// (x1 / xi, x2 (x1/xi + 1) / (x1/xi + a), x3, ..., xn).
inline RationalMap semisimple_inverse(const SemisimpleParam& p) {
    detail::check_dimension(p.n);
    if (p.xi.is_zero()) throw ContractViolation("xi must be nonzero");
    detail::Ring r(p.a.spec(), p.n);
    const Polynomial y = r.c(p.xi.inverse()) * r.x(1);
    return homogenize_affine(r.affine(y, y + r.one(), y + r.c(p.a)));
}

/// sigma with sigma o rho(xi^k, xi) o sigma^-1 = rho(1, xi):
///   k > 0: sigma = (x1, x2 prod_{i=1..k} (xi^-i + 1/x1), ...)
///   k < 0: sigma = (x1, x2 / prod_{i=0..-k-1} (xi^i + 1/x1), ...)
inline MapPair semisimple_conjugator(const FieldSpec& spec, std::size_t n, const Scalar& xi, long k) {
    detail::check_dimension(n);
    if (xi.is_zero()) throw ContractViolation("xi must be nonzero");
    if (k == 0) throw ContractViolation("k = 0: rho(1, xi) needs no conjugation");
    detail::Ring r(spec, n);
    // prod (c x1 + 1) / x1^|k| equals prod (c + 1/x1)
    Polynomial prod = r.one();
    const long count = k > 0 ? k : -k;
    for (long i = 0; i < count; ++i) {
        Scalar c = k > 0 ? xi.pow(-(i + 1)) : xi.pow(i);
        prod *= r.c(c) * r.x(1) + r.one();
    }
    const Polynomial x1_power = r.x(1).pow(static_cast<std::uint32_t>(count));
    AffineMap up = r.affine(r.x(1), prod, x1_power);
    AffineMap down = r.affine(r.x(1), x1_power, prod);
    if (k > 0) return {homogenize_affine(up), homogenize_affine(down)};
    return {homogenize_affine(down), homogenize_affine(up)};
}

inline RationalMap semisimple_normal_form(const Scalar& xi, std::size_t n) {
    return semisimple_map({n, Scalar::one(xi.spec()), xi});
}

/// Decides a = xi^k. Over F_p by walking the powers of xi (exact). Over Q by walking k = 0, 1,
/// -1, 2, ... up to k_max on each side, abandoning a side once |xi^k| has moved past |a|;
/// xi = +-1 and a = 0 are settled directly. Algebraic verdicts carry a checked conjugator.
inline ParamClassification semisimple_classify(const SemisimpleParam& p, long k_max = kDefaultKMax) {
    if (k_max < 1) throw ContractViolation("k_max must be >= 1");
    if (p.xi.is_zero()) throw ContractViolation("xi must be nonzero");
    const FieldSpec& spec = p.a.spec();
    std::optional<long> found;
    if (p.a.is_zero()) return {};
    if (spec.is_prime_field()) {
        Scalar w = Scalar::one(spec);
        for (long k = 0; k + 1 < static_cast<long>(spec.characteristic()); ++k) {
            if (w == p.a) {
                found = k;
                break;
            }
            w *= p.xi;
            if (w.is_one()) break;
        }
    } else {
        const mpq_class abs_a = abs(p.a.rational());
        const mpq_class abs_xi = abs(p.xi.rational());
        if (abs_xi == 1) {
            if (p.a.is_one()) found = 0;
            else if (p.a == p.xi) found = 1;
        } else {
            const bool grows = abs_xi > 1;
            bool up_done = false;
            bool down_done = false;
            Scalar up = Scalar::one(spec);
            Scalar down = Scalar::one(spec);
            const Scalar xi_inv = p.xi.inverse();
            for (long k = 0; k <= k_max && !found && !(up_done && down_done); ++k) {
                if (!up_done) {
                    if (up == p.a) found = k;
                    const mpq_class v = abs(up.rational());
                    up_done = grows ? v > abs_a : v < abs_a;
                    up *= p.xi;
                }
                if (!found && !down_done) {
                    if (down == p.a) found = -k;
                    const mpq_class v = abs(down.rational());
                    down_done = grows ? v < abs_a : v > abs_a;
                    down *= xi_inv;
                }
            }
            if (!found && !(up_done && down_done)) return detail::exhausted(k_max);
        }
    }
    if (!found) return {};
    const RationalMap map = semisimple_map(p);
    const RationalMap normal = semisimple_normal_form(p.xi, p.n);
    MapPair witness = *found == 0 ? MapPair{RationalMap::identity(spec, p.n), RationalMap::identity(spec, p.n)}
                                  : semisimple_conjugator(spec, p.n, p.xi, *found);
    return detail::algebraic(*found, std::move(witness), map, normal);
}

// ---------------------------------------------------------------------------------------------
// W_2 embeddings
// ---------------------------------------------------------------------------------------------

/// [mu x0 x1 : mu x1(x1 + x0) : mu x2 x1 + lambda x2 x0 : mu x3 x1 : ... : mu xn x1].
/// [1:t] projects to rho(t); mu = 0 gives a tuple with zero components (not birational).
inline WdPoint unipotent_wd_embedding(std::size_t n, const Scalar& mu, const Scalar& lambda) {
    detail::check_dimension(n);
    if (mu.is_zero() && lambda.is_zero()) throw ContractViolation("[mu:lambda] must not be [0:0]");
    detail::Ring r(mu.spec(), n);
    const Polynomial m = r.c(mu);
    std::vector<Polynomial> comps{m * r.x(0) * r.x(1), m * r.x(1) * (r.x(1) + r.x(0)),
                                  m * r.x(2) * r.x(1) + r.c(lambda) * r.x(2) * r.x(0)};
    for (std::size_t i = 3; i <= n; ++i) comps.push_back(m * r.x(i) * r.x(1));
    return WdPoint::make(std::move(comps));
}

/// [mu x0(x1 + x0) : lambda x1(x1 + x0) : x2(mu x1 + eta x0) : mu x3(x1 + x0) : ... ].
/// [1:a:xi] projects to rho(a, xi); birational iff mu lambda != 0.
inline WdPoint semisimple_wd_embedding(std::size_t n, const Scalar& mu, const Scalar& eta, const Scalar& lambda) {
    detail::check_dimension(n);
    if (mu.is_zero() && eta.is_zero() && lambda.is_zero()) throw ContractViolation("[mu:eta:lambda] must not be [0:0:0]");
    detail::Ring r(mu.spec(), n);
    const Polynomial l = r.x(1) + r.x(0);
    const Polynomial m = r.c(mu);
    std::vector<Polynomial> comps{m * r.x(0) * l, r.c(lambda) * r.x(1) * l, r.x(2) * (m * r.x(1) + r.c(eta) * r.x(0))};
    for (std::size_t i = 3; i <= n; ++i) comps.push_back(m * r.x(i) * l);
    return WdPoint::make(std::move(comps));
}

// ---------------------------------------------------------------------------------------------
// Parameter text
// ---------------------------------------------------------------------------------------------

using FamilyParam = std::variant<UnipotentParam, SemisimpleParam>;

namespace detail {

/// "key=value,key=value" after the "u:" / "s:" prefix.
inline std::vector<std::pair<std::string, std::string>> key_values(std::string_view body, std::size_t offset) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto item : split(body, ',')) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) throw ParseError("expected key=value", offset);
        out.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        offset += item.size() + 1;
    }
    return out;
}

inline std::size_t parse_dimension(const std::string& v) {
    std::size_t n = 0;
    for (char ch : v) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad dimension '" + v + "'", 0);
        n = n * 10 + static_cast<std::size_t>(ch - '0');
        if (n > 64) throw ParseError("dimension too large", 0);
    }
    if (v.empty()) throw ParseError("empty dimension", 0);
    return n;
}

}  // namespace detail

/// "u:n=<n>,t=<scalar>" or "s:n=<n>,a=<scalar>,xi=<scalar>".
inline FamilyParam parse_family(std::string_view text, const FieldSpec& spec) {
    if (text.size() < 2 || text[1] != ':' || (text[0] != 'u' && text[0] != 's'))
        throw ParseError("family must start with 'u:' or 's:'", 0);
    auto kv = detail::key_values(text.substr(2), 2);
    std::optional<std::size_t> n;
    std::optional<Scalar> t, a, xi;
    for (const auto& [key, value] : kv) {
        if (key == "n") n = detail::parse_dimension(value);
        else if (key == "t" && text[0] == 'u') t = Scalar::parse(value, spec);
        else if (key == "a" && text[0] == 's') a = Scalar::parse(value, spec);
        else if (key == "xi" && text[0] == 's') xi = Scalar::parse(value, spec);
        else throw ParseError("unknown family key '" + key + "'", 2);
    }
    if (!n) throw ParseError("family needs n=<dimension>", 2);
    if (text[0] == 'u') {
        if (!t) throw ParseError("unipotent family needs t=<scalar>", 2);
        return UnipotentParam{*n, *t};
    }
    if (!a || !xi) throw ParseError("semi-simple family needs a=<scalar> and xi=<scalar>", 2);
    return SemisimpleParam{*n, *a, *xi};
}

inline std::string to_string(const FamilyParam& p) {
    if (auto* u = std::get_if<UnipotentParam>(&p)) return "u:n=" + std::to_string(u->n) + ",t=" + u->t.to_string();
    const auto& s = std::get<SemisimpleParam>(p);
    return "s:n=" + std::to_string(s.n) + ",a=" + s.a.to_string() + ",xi=" + s.xi.to_string();
}

inline RationalMap family_map(const FamilyParam& p) {
    return std::visit([](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, UnipotentParam>) return unipotent_map(q);
        else return semisimple_map(q);
    }, p);
}

inline RationalMap family_inverse(const FamilyParam& p) {
    return std::visit([](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, UnipotentParam>) return unipotent_inverse(q);
        else return semisimple_inverse(q);
    }, p);
}

inline RationalMap family_iterate(const FamilyParam& p, int m) {
    return std::visit([m](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, UnipotentParam>) return unipotent_iterate(q, m);
        else return semisimple_iterate(q, m);
    }, p);
}

inline ParamClassification family_classify(const FamilyParam& p, long k_max = kDefaultKMax) {
    return std::visit([k_max](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, UnipotentParam>) return unipotent_classify(q, k_max);
        else return semisimple_classify(q, k_max);
    }, p);
}

}  // namespace cremona

#endif
