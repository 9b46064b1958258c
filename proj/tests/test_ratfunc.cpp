/*
   Copyright 2026 The cleanring authors

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cleanring/parse.hpp"
#include "cleanring/prime_field.hpp"
#include "cleanring/rational.hpp"
#include "cleanring/ratfunc.hpp"

using namespace cleanring;

namespace {

const Rational kQ1 = Rational(1);

Poly<Rational> qpoly(std::initializer_list<std::int64_t> coeffs) {
    std::vector<Rational> v;
    for (std::int64_t c : coeffs) v.emplace_back(c);
    return Poly<Rational>::from_coeffs(std::move(v));
}

RatFunc<Rational> qparse(const char* s) { return parse_ratfunc(s, kQ1); }
LocalElem<Rational> lparse(const char* s) { return parse_local(s, kQ1); }

Poly<Rational> random_poly(Rng& rng, int max_deg, bool nonzero_at_0) {
    std::vector<Rational> c;
    int deg = static_cast<int>(rng.in_range(0, max_deg));
    for (int i = 0; i <= deg; ++i) c.emplace_back(rng.in_range(-9, 9));
    if (nonzero_at_0)
        while (c[0].is_zero()) c[0] = Rational(rng.in_range(-9, 9));
    return Poly<Rational>::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("poly canonical form and degree sentinel") {
    Poly<Rational> z(Rational(0));
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());  // degree of 0 is the -infinity sentinel
    CHECK(qpoly({0}) == z);
    CHECK(qpoly({1, 2, 0, 0}) == qpoly({1, 2}));
    CHECK(qpoly({1, 2}).degree() == 1);
    CHECK(Poly<Rational>::monomial(Rational(1), 3) == qpoly({0, 0, 0, 1}));
    CHECK_THROWS_AS(z.lead(), std::domain_error);
}

TEST_CASE("poly arithmetic") {
    Poly<Rational> p = qpoly({1, 0, 1});  // 1 + t^2
    Poly<Rational> q = qpoly({1, 1});     // 1 + t
    CHECK(p + q == qpoly({2, 1, 1}));
    CHECK(p - p == Poly<Rational>(Rational(0)));
    CHECK(p * q == qpoly({1, 1, 1, 1}));
    CHECK(p.eval(Rational(2)) == Rational(5));
    CHECK(qpoly({0, 1}).shifted_up() == qpoly({0, 0, 1}));
    CHECK(qpoly({0, 0, 1}).shifted_down() == qpoly({0, 1}));
    CHECK_THROWS_AS(qpoly({1, 1}).shifted_down(), std::domain_error);
    CHECK(Poly<Rational>(Rational(0)).shifted_down().is_zero());
}

TEST_CASE("poly long division") {
    // (t^2 + 1) / (t + 1) = (t - 1) remainder 2
    auto [quot, rem] = poly_divmod(qpoly({1, 0, 1}), qpoly({1, 1}));
    CHECK(quot == qpoly({-1, 1}));
    CHECK(rem == Poly<Rational>(Rational(2)));
    // verify by expansion: p = q*quot + rem
    CHECK(qpoly({1, 1}) * quot + rem == qpoly({1, 0, 1}));

    auto [q1, r1] = poly_divmod(qpoly({3, 1, 4}), Poly<Rational>(Rational(1)));
    CHECK(q1 == qpoly({3, 1, 4}));
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divmod(qpoly({0, 1}), qpoly({0, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == qpoly({0, 1}));

    CHECK_THROWS_AS(poly_divmod(qpoly({1}), Poly<Rational>(Rational(0))), std::domain_error);
}

TEST_CASE("poly divmod postcondition on random inputs") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Poly<Rational> p = random_poly(rng, 6, false);
        Poly<Rational> q = random_poly(rng, 3, false);
        if (q.is_zero()) continue;
        auto [quot, rem] = poly_divmod(p, q);
        CHECK(q * quot + rem == p);
        CHECK((rem.is_zero() || rem.size() < q.size()));
    }
}

TEST_CASE("poly gcd and lcm") {
    Poly<Rational> a = qpoly({-1, 0, 1});  // t^2 - 1
    Poly<Rational> b = qpoly({-1, 1});     // t - 1
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_lcm(a, b) == a);
    CHECK(poly_gcd(qpoly({0, 2}), qpoly({0, 0, 4})) == qpoly({0, 1}));  // result monic
    CHECK_THROWS_AS(poly_gcd(Poly<Rational>(Rational(0)), Poly<Rational>(Rational(0))),
                    std::invalid_argument);
    // gcd over GF(2): t^2 + 1 = (t+1)^2
    Fp o(1, 2);
    auto t2p1 = Poly<Fp>::from_coeffs({o, o.zero_like(), o});
    auto tp1 = Poly<Fp>::from_coeffs({o, o});
    CHECK(poly_gcd(t2p1, tp1) == tp1);
}

TEST_CASE("derivative, including characteristic p collapse") {
    CHECK(derivative(qpoly({5, 3, 1})) == qpoly({3, 2}));
    CHECK(derivative(qpoly({5})).is_zero());
    // d/dt (t^2 + 1) = 2t = 0 over GF(2)
    Fp o(1, 2);
    auto t2p1 = Poly<Fp>::from_coeffs({o, o.zero_like(), o});
    CHECK(derivative(t2p1).is_zero());
}

TEST_CASE("ratfunc canonical form") {
    // common factor cancels
    CHECK(RatFunc<Rational>(qpoly({-1, 0, 1}), qpoly({-1, 1})) ==
          RatFunc<Rational>::from_poly(qpoly({1, 1})));
    // denominator normalized to monic
    CHECK(RatFunc<Rational>(qpoly({0, 2}), Poly<Rational>(Rational(2))) ==
          RatFunc<Rational>::from_poly(qpoly({0, 1})));
    // (1)/(2t-2) -> (1/2)/(t-1); cross-check by multiplying back
    RatFunc<Rational> f(Poly<Rational>(Rational(1)), qpoly({-2, 2}));
    CHECK(f.num() == Poly<Rational>(Rational(BigInt(1), BigInt(2))));
    CHECK(f.den() == qpoly({-1, 1}));
    CHECK(f * RatFunc<Rational>::from_poly(qpoly({-2, 2})) == RatFunc<Rational>::one(kQ1));

    CHECK_THROWS_AS(RatFunc<Rational>(qpoly({1}), Poly<Rational>(Rational(0))),
                    std::domain_error);
    CHECK(RatFunc<Rational>(Poly<Rational>(Rational(0)), qpoly({0, 5})).den().is_one());
}

TEST_CASE("ratfunc arithmetic") {
    RatFunc<Rational> f = qparse("t/(1-t)");
    RatFunc<Rational> g = qparse("1/(1-t)");
    CHECK(f + RatFunc<Rational>::one(kQ1) == g);
    CHECK(g - f == RatFunc<Rational>::one(kQ1));
    CHECK(f / g == qparse("t"));
    CHECK(f * f == qparse("t^2/(1-t)^2"));
    CHECK(-f == qparse("t/(t-1)"));
    CHECK_THROWS_AS(RatFunc<Rational>::zero(kQ1).inv(), std::domain_error);
}

TEST_CASE("locality predicate") {
    CHECK(qparse("(1-t)^-1").is_local());
    CHECK_FALSE(qparse("1/t").is_local());
    CHECK(qparse("t^3").is_local());
    // locality is read off the reduced form: t/(t^2) = 1/t
    CHECK_FALSE(RatFunc<Rational>(qpoly({0, 1}), qpoly({0, 0, 1})).is_local());
    CHECK_THROWS_AS(lparse("1/t"), std::domain_error);
}

TEST_CASE("split: named values") {
    // t/(1-t) = -1 + 1/(1-t)
    SplitPair<Rational> s = split(lparse("t/(1-t)"));
    CHECK(s.v0 == Poly<Rational>(Rational(-1)));
    CHECK(s.v1 == lparse("1/(1-t)"));

    SplitPair<Rational> s2 = split(lparse("t^2"));
    CHECK(s2.v0 == qpoly({0, 0, 1}));
    CHECK(s2.v1.is_zero());

    // (t^2+1)/(t+1) = (t-1) + 2/(t+1), per the division oracle above
    SplitPair<Rational> s3 = split(lparse("(t^2+1)/(t+1)"));
    CHECK(s3.v0 == qpoly({-1, 1}));
    CHECK(s3.v1 == lparse("2/(t+1)"));
}

TEST_CASE("split: reconstruction, properness, projection") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        Poly<Rational> num = random_poly(rng, 4, false);
        Poly<Rational> den = random_poly(rng, 4, true);
        LocalElem<Rational> f{RatFunc<Rational>(num, den)};
        SplitPair<Rational> s = split(f);

        // exact reconstruction
        CHECK(LocalElem<Rational>::from_poly(s.v0) + s.v1 == f);
        // v1 proper, and proper means value 0 at infinity
        CHECK(s.v1.is_proper());
        CHECK(s.v1.value().value_at_infinity() == Rational(0));
        // split is a projection: polynomial parts split to (v0, 0), proper
        // parts to (0, v1)
        SplitPair<Rational> s0 = split(LocalElem<Rational>::from_poly(s.v0));
        CHECK(s0.v0 == s.v0);
        CHECK(s0.v1.is_zero());
        SplitPair<Rational> s1 = split(s.v1);
        CHECK(s1.v0.is_zero());
        CHECK(s1.v1 == s.v1);
    }
}

TEST_CASE("evaluation at zero") {
    CHECK(eval_at_zero(lparse("(1-t)^-1")) == Rational(1));
    CHECK(eval_at_zero(lparse("t/(1-t)")) == Rational(0));
    CHECK(eval_at_zero(lparse("(t^2+1)/(t+1)")) == Rational(1));
}

TEST_CASE("evaluation at infinity") {
    CHECK(qparse("(1-t)^-1").value_at_infinity() == Rational(0));
    // t/(1-t): equal degrees, value is the ratio of leading coefficients
    CHECK(qparse("t/(1-t)").value_at_infinity() == Rational(-1));
    CHECK_FALSE(qparse("t^2").value_at_infinity().has_value());
    CHECK(RatFunc<Rational>::zero(kQ1).value_at_infinity() == Rational(0));
}

TEST_CASE("parser accepts the expression grammar") {
    CHECK(qparse("t/(1-t)") == RatFunc<Rational>(qpoly({0, 1}), qpoly({1, -1})));
    CHECK(qparse("(1+t^2)/(1+t)") == RatFunc<Rational>(qpoly({1, 0, 1}), qpoly({1, 1})));
    CHECK(qparse("(1-t)^-1") == RatFunc<Rational>(qpoly({1}), qpoly({1, -1})));
    CHECK(qparse("t^(-2)") == qparse("1/t^2"));
    CHECK(qparse("2*t + 3*t^2 - 1") == RatFunc<Rational>::from_poly(qpoly({-1, 2, 3})));
    CHECK(qparse(" ( 1 + t ) * ( 1 - t ) ") == RatFunc<Rational>::from_poly(qpoly({1, 0, -1})));
    CHECK(qparse("--t") == qparse("t"));
    CHECK(qparse("1/2/(1+t)") == RatFunc<Rational>(Poly<Rational>(Rational(BigInt(1), BigInt(2))),
                                                   qpoly({1, 1})));
    CHECK(qparse("t^0") == RatFunc<Rational>::one(kQ1));
    CHECK(qparse("12345678901234567890123") ==
          RatFunc<Rational>::from_poly(Poly<Rational>(Rational(BigInt("12345678901234567890123")))));
}

TEST_CASE("parser rejects bad input with positions") {
    CHECK_THROWS_AS(qparse("1/0"), std::domain_error);
    CHECK_THROWS_AS(qparse("(1-t)^-1 + 1/(t*0)"), std::domain_error);
    CHECK_THROWS_AS(qparse("0^-1"), std::domain_error);
    CHECK_THROWS_AS(qparse(""), ParseError);
    CHECK_THROWS_AS(qparse("t +"), ParseError);
    CHECK_THROWS_AS(qparse("(1+t"), ParseError);
    CHECK_THROWS_AS(qparse("t^x"), ParseError);
    CHECK_THROWS_AS(qparse("u"), ParseError);
    CHECK_THROWS_AS(qparse("1 1"), ParseError);
    CHECK_THROWS_AS(qparse("t^99999999"), ParseError);
    bool threw = false;
    try {
        qparse("1+ &t");
    } catch (const ParseError& e) {
        threw = true;
        CHECK(e.position() == 3);
    }
    CHECK(threw);
}

TEST_CASE("parser folds coefficients into the active field") {
    Fp one(1, 5);
    RatFunc<Fp> f = parse_ratfunc("7*t + 12", one);  // = 2t + 2 over GF(5)
    CHECK(f == RatFunc<Fp>::from_poly(
                   Poly<Fp>::from_coeffs({Fp(2, 5), Fp(2, 5)})));
    // 5 = 0 mod 5: division by an expression that reduces to zero
    CHECK_THROWS_AS(parse_ratfunc("1/5", one), std::domain_error);
    CHECK_THROWS_AS(parse_ratfunc("1/(1+4)", one), std::domain_error);
}

TEST_CASE("print/parse round trip") {
    // canonical form has monic denominator, so the sign moves to the numerator
    CHECK(local_to_string(lparse("t/(1-t)")) == "-t/(t - 1)");

    Rng rng(17);
    for (int i = 0; i < 150; ++i) {
        Poly<Rational> num = random_poly(rng, 4, false);
        Poly<Rational> den = random_poly(rng, 4, false);
        if (den.is_zero()) continue;
        RatFunc<Rational> f(num, den);
        // make some coefficients non-integral
        if (i % 3 == 0) f = f * Rational(BigInt(1), BigInt(rng.in_range(2, 7)));
        CHECK(qparse(ratfunc_to_string(f).c_str()) == f);
    }

    Fp one(1, 7);
    Rng rng2(18);
    for (int i = 0; i < 100; ++i) {
        std::vector<Fp> nc, dc;
        std::int64_t nd = rng2.in_range(0, 4), dd = rng2.in_range(0, 4);
        for (std::int64_t j = 0; j <= nd; ++j) nc.push_back(one.from_int(rng2.in_range(0, 6)));
        for (std::int64_t j = 0; j <= dd; ++j) dc.push_back(one.from_int(rng2.in_range(0, 6)));
        Poly<Fp> num = Poly<Fp>::from_coeffs(nc);
        Poly<Fp> den = Poly<Fp>::from_coeffs(dc);
        if (den.is_zero()) continue;
        RatFunc<Fp> f(num, den);
        CHECK(parse_ratfunc(ratfunc_to_string(f), one) == f);
    }
}
