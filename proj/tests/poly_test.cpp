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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cremona/gcd.hpp"
#include "cremona/poly.hpp"
#include "oracle.hpp"

namespace cremona {
namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);

Polynomial P(const char* s, const FieldSpec& spec = Q, std::size_t nvars = 3) { return parse_poly(s, spec, nvars); }

TEST(Parse, Basic) {
    Polynomial m = P("x0*x1");
    ASSERT_EQ(m.size(), 1U);
    EXPECT_TRUE(m.leading_coeff().is_one());
    EXPECT_EQ(m.leading_monomial().exponents(), (std::vector<std::uint32_t>{1, 1, 0}));
    EXPECT_EQ(P("7*x0", F5), P("2*x0", F5));
    EXPECT_EQ(P("x1^2 + x0*x1 - x1^2"), P("x0*x1"));
    EXPECT_EQ(P("  -x1 + 3/2 * x0 ^2* x2 "), P("3/2*x0^2*x2 - x1"));
    EXPECT_TRUE(P("x1 - x1").is_zero());
}

TEST(Parse, Errors) {
    EXPECT_THROW(P("x3"), ParseError);
    EXPECT_THROW(P("x0 +"), ParseError);
    EXPECT_THROW(P("x0 x1"), ParseError);
    EXPECT_THROW(P("2x0"), ParseError);
    EXPECT_THROW(P("1/0*x0"), ParseError);
    EXPECT_THROW(P("x0^"), ParseError);
    try {
        P("x0 + x7");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6U);
    }
}

TEST(Print, Format) {
    EXPECT_EQ(P("x1 + x0").to_string(), "x0 + x1");
    EXPECT_EQ(P("-x1^2 + 1 - 1/2*x0*x2").to_string(), "-1/2*x0*x2 - x1^2 + 1");
    EXPECT_EQ(P("0").to_string(), "0");
    EXPECT_EQ(P("-3", F5).to_string(), "2");
    for (const char* s : {"x0^3 - 2/7*x0*x1*x2 + x2", "x0*x1", "-1", "x2^4 + 3*x1"}) {
        const std::string once = P(s).to_string();
        EXPECT_EQ(P(once.c_str()).to_string(), once);
    }
}

TEST(Arithmetic, Examples) {
    EXPECT_EQ(P("x1 + x0") * P("x1 - x0"), P("x1^2 - x0^2"));
    EXPECT_EQ(P("x1^2 + x2") + P("0"), P("x1^2 + x2"));
    // (x1 + 2x0)(x1 + 3x0) = x1^2 + 5 x0 x1 + 6 x0^2 = x1^2 + x0^2 mod 5; checked on all of F5^2 too
    Polynomial prod = P("x1 + 2*x0", F5, 2) * P("x1 + 3*x0", F5, 2);
    EXPECT_EQ(prod, P("x1^2 + x0^2", F5, 2));
    for (long a = 0; a < 5; ++a)
        for (long b = 0; b < 5; ++b) {
            std::vector<Scalar> pt{Scalar(F5, a), Scalar(F5, b)};
            EXPECT_EQ(prod.eval(pt).residue(), static_cast<std::uint64_t>((b * b + a * a) % 5));
        }
    EXPECT_EQ(-P("x0 - x1"), P("x1 - x0"));
    EXPECT_EQ(P("x0 + x1").pow(3).total_degree(), 3);
}

TEST(Arithmetic, Mismatch) {
    EXPECT_THROW(P("x0") + P("x0", F5), FieldMismatch);
    EXPECT_THROW(P("x0") * P("x0", Q, 2), FieldMismatch);
}

TEST(DivExact, Examples) {
    EXPECT_EQ(divexact(P("x1^2 - x0^2"), P("x1 - x0")), P("x1 + x0"));
    EXPECT_EQ(divexact(P("x1^2 + x2"), P("1")), P("x1^2 + x2"));
    Polynomial num = P("x1") * P("x1 + x0") * P("x1 + 2*x0");
    Polynomial q = divexact(num, P("x1^2 + x0*x1"));
    EXPECT_EQ(q, P("x1 + 2*x0"));
    EXPECT_EQ(q * P("x1^2 + x0*x1"), num);
}

TEST(DivExact, Errors) {
    EXPECT_THROW(divexact(P("x1^2 + 1"), P("x1 - x0")), InexactDivision);
    EXPECT_THROW(divexact(P("x1"), P("0")), DivisionByZero);
    EXPECT_FALSE(try_divexact(P("x0 + 1"), P("x0")).has_value());
}

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd(P("x1^2 + x0*x1"), P("x0*x1")), P("x1"));
    EXPECT_EQ(gcd(P("x1 + x0"), P("x1 + 2*x0")), P("1"));
    Polynomial a = P("x1 + x0").pow(2) * P("x1 + 2*x0");
    Polynomial b = P("x1 + x0") * P("x1 + 3*x0");
    Polynomial g = gcd(a, b);
    EXPECT_EQ(g, P("x1 + x0"));
    // cofactors are exact and coprime
    EXPECT_EQ(gcd(divexact(a, g), divexact(b, g)), P("1"));
}

TEST(Gcd, Normalization) {
    EXPECT_EQ(gcd(P("3*x0*x1"), P("6*x0^2")), P("x0"));
    EXPECT_EQ(gcd(P("0"), P("2*x1 + 4")), P("x1 + 2"));
    EXPECT_EQ(gcd(P("5"), P("x1")), P("1"));
    EXPECT_THROW(gcd(P("0"), P("0")), ContractViolation);
    EXPECT_THROW(gcd(P("x0"), P("x0", F5)), FieldMismatch);
}

TEST(Gcd, MultivariateNonLinear) {
    Polynomial common = P("x0^2*x2 + 3*x1*x2^2 - 1/2*x0*x1*x2 + x1");
    Polynomial a = common * P("x2 - x1 + 5*x0");
    Polynomial b = common * P("x2^2 - x0*x1 + 1") * P("x0 + x1 + x2");
    EXPECT_EQ(gcd(a, b), common.monic());
    Polynomial c5 = P("x0^2 + 2*x1*x2 + 4", F5);
    EXPECT_EQ(gcd(c5 * P("x1 + x2", F5), c5 * P("x1 + 3*x2 + x0", F5)), c5.monic());
}

TEST(Homogenize, Examples) {
    EXPECT_EQ(homogenize(P("x1 + 1"), 1), P("x1 + x0"));
    EXPECT_EQ(homogenize(P("x1 + 5"), 2), P("x0*x1 + 5*x0^2"));
    EXPECT_THROW(homogenize(P("x1^2"), 1), ContractViolation);
    EXPECT_THROW(homogenize(P("x0 + x1"), 2), ContractViolation);
    EXPECT_EQ(dehomogenize(P("x0^2*x1 + x0*x2^2")), P("x1 + x2^2"));
    EXPECT_TRUE(homogenize(P("x1*x2 - 3*x2 + 7"), 4).is_homogeneous());
}

TEST(Eval, Examples) {
    std::vector<Scalar> one_one{Scalar(Q, 1), Scalar(Q, 1)};
    EXPECT_TRUE(P("x1^2 - x0^2", Q, 2).eval(one_one).is_zero());
    std::vector<Scalar> two_three{Scalar(Q, 2), Scalar(Q, 3)};
    EXPECT_EQ(P("x0*x1", Q, 2).eval(two_three), Scalar(Q, 6));
    EXPECT_THROW(P("x0*x1").eval(two_three), ContractViolation);
}

TEST(Substitute, Composition) {
    // x0*x1 with x0 -> x0 + x1, x1 -> x0 - x1 gives x0^2 - x1^2
    std::vector<Polynomial> args{P("x0 + x1", Q, 2), P("x0 - x1", Q, 2)};
    EXPECT_EQ(P("x0*x1", Q, 2).substitute(args), P("x0^2 - x1^2", Q, 2));
}

// --- Randomized properties (fixed seed) ---

Polynomial random_poly(std::mt19937_64& rng, const FieldSpec& spec, std::size_t nvars, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> terms(1, max_terms), exp(0, max_deg);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<Term> ts;
    for (int i = 0, n = terms(rng); i < n; ++i) {
        std::vector<std::uint32_t> e(nvars);
        for (auto& x : e) x = static_cast<std::uint32_t>(exp(rng));
        ts.push_back({Scalar(spec, coeff(rng)), Monomial(e)});
    }
    return Polynomial::from_terms(spec, nvars, ts);
}

Polynomial random_form(std::mt19937_64& rng, const FieldSpec& spec, std::size_t nvars, int degree) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    Polynomial p(spec, nvars);
    do {
        p = Polynomial::one(spec, nvars);
        for (int k = 0; k < degree; ++k) {
            Polynomial lin(spec, nvars);
            for (std::size_t i = 0; i < nvars; ++i)
                lin += Polynomial::variable(spec, nvars, i).scaled(Scalar(spec, coeff(rng)));
            p *= lin;
        }
    } while (p.is_zero());
    return p;
}

class PolyProperties : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(PolyProperties, CanonicalAndHomomorphism) {
    const FieldSpec spec = GetParam();
    std::mt19937_64 rng(oracle::kSeed);
    std::uniform_int_distribution<long> val(-6, 6);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_poly(rng, spec, 3, 5, 3), b = random_poly(rng, spec, 3, 5, 3);
        std::vector<Scalar> pt{Scalar(spec, val(rng)), Scalar(spec, val(rng)), Scalar(spec, val(rng))};
        EXPECT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
        EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
        Polynomial prod = a * b;
        Polynomial again = Polynomial::from_terms(spec, 3, prod.terms());
        EXPECT_EQ(again, prod);
        EXPECT_EQ(parse_poly(prod.to_string(), spec, 3), prod);
        if (!a.is_zero() && !b.is_zero()) {
            EXPECT_EQ(prod.total_degree(), a.total_degree() + b.total_degree());
        }
        Polynomial affine = dehomogenize(a);
        EXPECT_EQ(dehomogenize(homogenize(affine, std::max(affine.total_degree(), 0))), affine);
    }
}

TEST_P(PolyProperties, GcdOfProducts) {
    const FieldSpec spec = GetParam();
    std::mt19937_64 rng(oracle::kSeed + 1);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int i = 0; i < 60; ++i) {
        Polynomial p = random_form(rng, spec, 3, deg(rng)), q = random_form(rng, spec, 3, deg(rng));
        Polynomial r = random_form(rng, spec, 3, 1 + deg(rng));
        Polynomial g = gcd(p * r, q * r);
        EXPECT_TRUE(try_divexact(p * r, g).has_value());
        EXPECT_TRUE(try_divexact(q * r, g).has_value());
        EXPECT_EQ(g, (gcd(p, q) * r).monic());
        EXPECT_TRUE(g.leading_coeff().is_one());
        EXPECT_TRUE((p * q).is_homogeneous());
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, PolyProperties, ::testing::Values(FieldSpec::rationals(), FieldSpec::prime_field(5)));

}  // namespace
}  // namespace cremona
