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
 * @file ratmap.hpp
 * @brief Rational self-maps of P^n given by homogeneous tuples.
 *
 * `WdPoint` is a raw tuple of degree-d forms up to a common scalar; two different points can
 * describe the same map. `RationalMap` is the reduced representative: components divided by
 * their gcd and scaled so the first nonzero one is monic. Its degree is the degree of the map.
 */

#ifndef CREMONA_RATMAP_HPP
#define CREMONA_RATMAP_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/gcd.hpp"
#include "cremona/poly.hpp"

namespace cremona {

namespace detail {

// Common degree of a tuple of forms; throws on inhomogeneous or mixed-degree input.
inline int common_degree(const std::vector<Polynomial>& comps) {
    if (comps.size() < 2) throw ContractViolation("a map of P^n needs at least two components");
    int d = -1;
    for (const auto& c : comps) {
        comps.front().check(c);
        if (c.nvars() != comps.size()) throw ContractViolation("components must be polynomials in x0..xn");
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) throw ContractViolation("component " + c.to_string() + " is not homogeneous");
        if (d >= 0 && c.total_degree() != d) throw ContractViolation("components have mixed degrees");
        d = c.total_degree();
    }
    if (d < 0) throw ContractViolation("all components are zero");
    return d;
}

inline void normalize_leading(std::vector<Polynomial>& comps) {
    auto first = std::find_if(comps.begin(), comps.end(), [](const Polynomial& p) { return !p.is_zero(); });
    if (first->leading_coeff().is_one()) return;
    Scalar s = first->leading_coeff().inverse();
    for (auto& c : comps) c = c.scaled(s);
}

inline std::string join(const std::vector<Polynomial>& comps, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) out += sep;
        out += comps[i].to_string();
    }
    return out;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

}  // namespace detail

/// A point of W_d: (h0 : ... : hn), forms of one degree d >= 1, not all zero, first nonzero monic.
class WdPoint {
   public:
    static WdPoint make(std::vector<Polynomial> components) {
        int d = detail::common_degree(components);
        if (d < 1) throw ContractViolation("W_d needs degree d >= 1");
        detail::normalize_leading(components);
        WdPoint w;
        w.components_ = std::move(components);
        w.degree_ = d;
        return w;
    }

    std::size_t n() const noexcept { return components_.size() - 1; }
    int degree() const noexcept { return degree_; }
    const FieldSpec& spec() const noexcept { return components_.front().spec(); }
    const std::vector<Polynomial>& components() const noexcept { return components_; }

    /// Necessary condition only: a tuple with an identically zero component lands in a
    /// hyperplane, so it cannot be birational. A false answer proves nothing.
    bool obviously_not_birational() const {
        return std::any_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
    }

    bool operator==(const WdPoint&) const = default;

    std::string to_string() const { return detail::join(components_, "; "); }

   private:
    WdPoint() = default;
    std::vector<Polynomial> components_;
    int degree_ = 0;
};

class RationalMap {
   public:
    /// Cancels the gcd of the components and scales the first nonzero one to be monic.
    static RationalMap from_components(std::vector<Polynomial> components) {
        detail::common_degree(components);
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < components.size(); ++i)
            if (!components[i].is_zero()) order.push_back(i);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return components[a].size() < components[b].size(); });
        Polynomial g = components[order.front()].monic();
        for (std::size_t k = 1; k < order.size() && !g.is_constant(); ++k) g = gcd(g, components[order[k]]);
        if (!g.is_constant())
            for (auto& c : components)
                if (!c.is_zero()) c = divexact(c, g);
        int d = detail::common_degree(components);
        if (d < 1) throw ContractViolation("tuple reduces to a constant map");
        detail::normalize_leading(components);
        RationalMap f;
        f.components_ = std::move(components);
        f.degree_ = d;
        return f;
    }

    /// (x0 : x1 : ... : xn).
    static RationalMap identity(const FieldSpec& spec, std::size_t n) {
        std::vector<Polynomial> comps;
        for (std::size_t i = 0; i <= n; ++i) comps.push_back(Polynomial::variable(spec, n + 1, i));
        RationalMap f;
        f.components_ = std::move(comps);
        f.degree_ = 1;
        return f;
    }

    std::size_t n() const noexcept { return components_.size() - 1; }
    int degree() const noexcept { return degree_; }
    const FieldSpec& spec() const noexcept { return components_.front().spec(); }
    const std::vector<Polynomial>& components() const noexcept { return components_; }

    bool operator==(const RationalMap&) const = default;

    /// Semicolon-separated components, e.g. "x0*x1; x0*x1 + x1^2; x1*x2".
    std::string to_string() const { return detail::join(components_, "; "); }
    friend std::ostream& operator<<(std::ostream& os, const RationalMap& f) { return os << f.to_string(); }

   private:
    RationalMap() = default;
    std::vector<Polynomial> components_;
    int degree_ = 0;
};

/// pi_d: the map a W_d point defines.
inline RationalMap project_map(const WdPoint& w) { return RationalMap::from_components(w.components()); }

/// f o g. Throws ContractViolation if g lands in the indeterminacy locus of f
/// (the substituted tuple vanishes identically).
inline RationalMap compose(const RationalMap& f, const RationalMap& g) {
    if (f.n() != g.n()) throw ContractViolation("cannot compose maps of different dimensions");
    if (!(f.spec() == g.spec())) throw FieldMismatch("cannot compose maps over different fields");
    std::vector<Polynomial> comps;
    comps.reserve(f.components().size());
    for (const auto& c : f.components()) comps.push_back(c.substitute(g.components()));
    if (std::all_of(comps.begin(), comps.end(), [](const Polynomial& p) { return p.is_zero(); }))
        throw ContractViolation("composition vanishes identically");
    return RationalMap::from_components(std::move(comps));
}

/// f^m for m >= 1, cancelling after every composition.
inline RationalMap power(const RationalMap& f, int m) {
    if (m < 1) throw ContractViolation("power needs m >= 1");
    RationalMap r = f;
    for (int i = 1; i < m; ++i) r = compose(f, r);
    return r;
}

/// Components are stored normalized, so this is plain equality of the reduced representatives.
inline bool eq_up_to_scalar(const RationalMap& f, const RationalMap& g) {
    return f.n() == g.n() && f.spec() == g.spec() && f.degree() == g.degree() && f.components() == g.components();
}

inline bool verify_inverse(const RationalMap& f, const RationalMap& g) {
    if (f.n() != g.n() || !(f.spec() == g.spec())) return false;
    const RationalMap id = RationalMap::identity(f.spec(), f.n());
    try {
        return eq_up_to_scalar(compose(f, g), id) && eq_up_to_scalar(compose(g, f), id);
    } catch (const ContractViolation&) {
        return false;
    }
}

inline bool commutes(const RationalMap& f, const RationalMap& g) {
    return eq_up_to_scalar(compose(f, g), compose(g, f));
}

/// psi o f o psi^-1.
inline RationalMap conjugate(const RationalMap& psi, const RationalMap& psi_inv, const RationalMap& f) {
    if (!verify_inverse(psi, psi_inv)) throw ContractViolation("conjugator and its inverse do not compose to the identity");
    return compose(psi, compose(f, psi_inv));
}

/// [x0 : ... : xn], not all zero, first nonzero coordinate scaled to 1.
class ProjectivePoint {
   public:
    static ProjectivePoint make(std::vector<Scalar> coords) {
        auto first = std::find_if(coords.begin(), coords.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (first == coords.end()) throw ContractViolation("projective point with all coordinates zero");
        if (coords.size() < 2) throw ContractViolation("projective point needs at least two coordinates");
        Scalar s = first->inverse();
        for (auto& c : coords) c *= s;
        ProjectivePoint p;
        p.coords_ = std::move(coords);
        return p;
    }

    const std::vector<Scalar>& coords() const noexcept { return coords_; }
    bool operator==(const ProjectivePoint&) const = default;

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? ":" : "") + coords_[i].to_string();
        return out + "]";
    }

   private:
    ProjectivePoint() = default;
    std::vector<Scalar> coords_;
};

namespace detail {

inline std::optional<ProjectivePoint> evaluate_tuple(const std::vector<Polynomial>& comps, const ProjectivePoint& p) {
    if (p.coords().size() != comps.size()) throw ContractViolation("point and map dimensions differ");
    std::vector<Scalar> image;
    image.reserve(comps.size());
    for (const auto& c : comps) image.push_back(c.eval(p.coords()));
    if (std::all_of(image.begin(), image.end(), [](const Scalar& s) { return s.is_zero(); })) return std::nullopt;
    return ProjectivePoint::make(std::move(image));
}

}  // namespace detail

/// nullopt when every component vanishes at p (p is an indeterminacy point).
inline std::optional<ProjectivePoint> evaluate(const RationalMap& f, const ProjectivePoint& p) {
    return detail::evaluate_tuple(f.components(), p);
}

/// Same on a raw W_d tuple, whose common factor adds vanishing points the reduced map lacks.
inline std::optional<ProjectivePoint> evaluate(const WdPoint& w, const ProjectivePoint& p) {
    return detail::evaluate_tuple(w.components(), p);
}

struct AffineComponent {
    Polynomial num;
    Polynomial den;

    bool operator==(const AffineComponent&) const = default;
};

/// n rational functions num/den in x1..xn (polynomials in the ring x0..xn that avoid x0),
/// each reduced with a monic denominator.
class AffineMap {
   public:
    static AffineMap make(std::vector<AffineComponent> comps) {
        if (comps.empty()) throw ContractViolation("affine map needs at least one component");
        const std::size_t nvars = comps.size() + 1;
        for (auto& c : comps) {
            c.num.check(c.den);
            comps.front().num.check(c.num);
            if (c.num.nvars() != nvars) throw ContractViolation("affine components must live in x0..xn");
            if (c.den.is_zero()) throw DivisionByZero("affine component with zero denominator");
            if (c.num.mentions(0) || c.den.mentions(0)) throw ContractViolation("affine components must not mention x0");
            Polynomial g = gcd(c.num, c.den);
            if (!g.is_one()) {
                c.num = divexact(c.num, g);
                c.den = divexact(c.den, g);
            }
            Scalar s = c.den.leading_coeff().inverse();
            c.num = c.num.scaled(s);
            c.den = c.den.scaled(s);
        }
        AffineMap m;
        m.comps_ = std::move(comps);
        return m;
    }

    std::size_t n() const noexcept { return comps_.size(); }
    const std::vector<AffineComponent>& components() const noexcept { return comps_; }
    bool operator==(const AffineMap&) const = default;

    /// Comma-separated "num/den" pairs; a denominator of 1 is omitted.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (i) out += ", ";
            out += comps_[i].num.to_string();
            if (!comps_[i].den.is_one()) out += "/" + comps_[i].den.to_string();
        }
        return out;
    }

   private:
    AffineMap() = default;
    std::vector<AffineComponent> comps_;
};

/// The chart x0 = 1: component i becomes h_i / h_0.
inline AffineMap affine_restriction(const RationalMap& f) {
    if (f.components().front().is_zero()) throw ContractViolation("map contracts the chart x0 = 1");
    Polynomial den = dehomogenize(f.components().front());
    std::vector<AffineComponent> comps;
    for (std::size_t i = 1; i < f.components().size(); ++i)
        comps.push_back({dehomogenize(f.components()[i]), den});
    return AffineMap::make(std::move(comps));
}

/// Clears denominators with their lcm L and homogenizes (L : num_1 L/den_1 : ...) in the least
/// degree that holds every entry.
inline RationalMap homogenize_affine(const AffineMap& m) {
    Polynomial l = m.components().front().den;
    for (const auto& c : m.components()) l = lcm(l, c.den);
    std::vector<Polynomial> affine{l};
    int d = l.total_degree();
    for (const auto& c : m.components()) {
        affine.push_back(c.num * divexact(l, c.den));
        d = std::max(d, affine.back().total_degree());
    }
    if (d < 1) d = 1;
    std::vector<Polynomial> comps;
    for (const auto& a : affine) comps.push_back(a.is_zero() ? a : homogenize(a, d));
    return RationalMap::from_components(std::move(comps));
}

/// "h0; h1; ...; hn" with n+1 components in x0..xn.
inline RationalMap parse_map(std::string_view text, const FieldSpec& spec) {
    auto parts = detail::split(text, ';');
    std::vector<Polynomial> comps;
    std::size_t offset = 0;
    for (auto part : parts) {
        try {
            comps.push_back(parse_poly(part, spec, parts.size()));
        } catch (const ParseError& e) {
            throw ParseError("bad map component '" + std::string(part) + "'", offset + e.position());
        }
        offset += part.size() + 1;
    }
    return RationalMap::from_components(std::move(comps));
}

/// "num/den, num/den, ..." in x1..xn; a missing "/den" means 1.
inline AffineMap parse_affine_map(std::string_view text, const FieldSpec& spec) {
    auto parts = detail::split(text, ',');
    const std::size_t nvars = parts.size() + 1;
    std::vector<AffineComponent> comps;
    std::size_t offset = 0;
    for (auto part : parts) {
        detail::PolyParser parser(part, spec, nvars);
        try {
            Polynomial num = parser.expression();
            Polynomial den = Polynomial::one(spec, nvars);
            parser.skip_ws();
            if (parser.peek() == '/') {
                ++parser.pos;
                den = parser.expression();
                parser.skip_ws();
            }
            if (parser.pos != part.size()) throw ParseError("unexpected character", parser.pos);
            if (num.mentions(0) || den.mentions(0)) throw ParseError("affine components use x1..xn only", 0);
            if (den.is_zero()) throw ParseError("zero denominator", 0);
            comps.push_back({std::move(num), std::move(den)});
        } catch (const ParseError& e) {
            throw ParseError("bad affine component '" + std::string(part) + "'", offset + e.position());
        }
        offset += part.size() + 1;
    }
    return AffineMap::make(std::move(comps));
}

}  // namespace cremona

#endif
