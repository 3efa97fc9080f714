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

// Independent oracles for the test suites. Nothing here calls into the library's polynomial,
// gcd or map code: dense univariate arithmetic over mpq_class or Z/p, pointwise iteration of the
// family chart formulas, brute-force modular powers.

#ifndef CREMONA_TESTS_ORACLE_HPP
#define CREMONA_TESTS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline constexpr std::uint64_t kSeed = 20261014;

/// Z/p with p stored per element; p is tiny in the tests.
struct ModP {
    long v = 0;
    long p = 1;

    ModP() = default;
    ModP(long value, long modulus) : v(((value % modulus) + modulus) % modulus), p(modulus) {}

    friend ModP operator+(ModP a, ModP b) { return {a.v + b.v, a.p}; }
    friend ModP operator-(ModP a, ModP b) { return {a.v - b.v, a.p}; }
    friend ModP operator*(ModP a, ModP b) { return {a.v * b.v, a.p}; }
    friend ModP operator/(ModP a, ModP b) {
        for (long inv = 1; inv < a.p; ++inv)
            if ((b.v * inv) % a.p == 1) return {a.v * inv, a.p};
        return {0, a.p};
    }
    friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
    bool is_zero() const { return v == 0; }
};

inline bool is_zero(const mpq_class& q) { return sgn(q) == 0; }
inline bool is_zero(const ModP& q) { return q.is_zero(); }

/// a^e by e-fold multiplication.
inline long brute_pow_mod(long a, long e, long p) {
    long r = 1 % p;
    for (long i = 0; i < e; ++i) r = (r * a) % p;
    return r;
}

/// Dense univariate polynomial, c[i] multiplies x^i; zero is the empty vector.
template <class F>
struct Dense {
    std::vector<F> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    friend Dense operator*(const Dense& a, const Dense& b) {
        if (a.c.empty() || b.c.empty()) return {};
        Dense r;
        r.c.assign(a.c.size() + b.c.size() - 1, a.c[0] - a.c[0]);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }
};

/// a mod b over a field.
template <class F>
Dense<F> remainder(Dense<F> a, const Dense<F>& b) {
    while (a.degree() >= b.degree() && !a.c.empty()) {
        F q = a.c.back() / b.c.back();
        const std::size_t shift = a.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] = a.c[i + shift] - q * b.c[i];
        a.c.pop_back();
        a.trim();
    }
    return a;
}

template <class F>
Dense<F> euclid_gcd(Dense<F> a, Dense<F> b) {
    while (!b.c.empty()) {
        Dense<F> r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// prod_i (s_i x + o_i).
template <class F>
Dense<F> product_of_linears(const std::vector<F>& slopes, const std::vector<F>& offsets, F one) {
    Dense<F> r{{one}};
    for (std::size_t i = 0; i < slopes.size(); ++i) r = r * Dense<F>{{offsets[i], slopes[i]}};
    return r;
}

/// deg of the reduced homogeneous form of (x1 + m or xi^m x1, x2 N/D, ...): with D', N' the
/// coprime parts, the tuple is (D', c x1 D', x2 N'), and deg N' = deg D'.
template <class F>
int iterate_degree(const Dense<F>& num, const Dense<F>& den) {
    Dense<F> g = euclid_gcd(num, den);
    return den.degree() - g.degree() + 1;
}

/// deg rho(t)^m through dense gcd of prod (x + t + i) and prod (x + i).
template <class F>
int unipotent_degree(F t, int m, F zero, F one) {
    std::vector<F> slopes, num_off, den_off;
    F i_val = zero;
    for (int i = 0; i < m; ++i) {
        slopes.push_back(one);
        num_off.push_back(t + i_val);
        den_off.push_back(i_val);
        i_val = i_val + one;
    }
    return iterate_degree(product_of_linears(slopes, num_off, one), product_of_linears(slopes, den_off, one));
}

/// deg rho(a, xi)^m through dense gcd of prod (xi^i x + a) and prod (xi^i x + 1).
template <class F>
int semisimple_degree(F a, F xi, int m, F one) {
    std::vector<F> slopes, num_off, den_off;
    F w = one;
    for (int i = 0; i < m; ++i) {
        slopes.push_back(w);
        num_off.push_back(a);
        den_off.push_back(one);
        w = w * xi;
    }
    return iterate_degree(product_of_linears(slopes, num_off, one), product_of_linears(slopes, den_off, one));
}

/// m-fold application of the unipotent chart formula; nullopt on hitting a pole.
inline std::optional<std::vector<mpq_class>> unipotent_chart(const mpq_class& t, int m, std::vector<mpq_class> x) {
    for (int k = 0; k < m; ++k) {
        if (sgn(x[0]) == 0) return std::nullopt;
        x[1] = x[1] * (x[0] + t) / x[0];
        x[0] = x[0] + 1;
    }
    return x;
}

inline std::optional<std::vector<mpq_class>> semisimple_chart(const mpq_class& a, const mpq_class& xi, int m,
                                                              std::vector<mpq_class> x) {
    for (int k = 0; k < m; ++k) {
        if (sgn(x[0] + 1) == 0) return std::nullopt;
        x[1] = x[1] * (x[0] + a) / (x[0] + 1);
        x[0] = xi * x[0];
    }
    return x;
}

}  // namespace oracle

#endif
