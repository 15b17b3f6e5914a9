/*
   Copyright 2026 The spechtlab Authors

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

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace spechtlab;
using oracle::BigQ;

TEST_CASE("rational canonical form and text", "[exact]") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(4, -2).str() == "-2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("6/-4"), UsageError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/x"), UsageError);
}

TEST_CASE("rational arithmetic agrees with boost rationals, including overflow into GMP", "[exact]") {
  oracle::Random rng(11);
  for (int k = 0; k < 500; ++k) {
    // Values near the int64 boundary force the wide and big paths.
    const std::int64_t big = (std::int64_t{1} << 62) - rng.uniform(0, 1000);
    const Rational a = k % 3 == 0 ? Rational(big, rng.uniform(1, 97)) : rng.rational(1000);
    const Rational b = k % 5 == 0 ? Rational(rng.uniform(1, 1000), big) : rng.rational(1000);
    const BigQ x = oracle::to_big(a);
    const BigQ y = oracle::to_big(b);
    CHECK(oracle::to_big(a + b) == x + y);
    CHECK(oracle::to_big(a - b) == x - y);
    CHECK(oracle::to_big(a * b) == x * y);
    if (!b.is_zero()) CHECK(oracle::to_big(a / b) == x / y);
    CHECK(((a <=> b) < 0) == (x < y));
  }
  Rational p = 1;
  for (int i = 0; i < 40; ++i) p *= Rational(1000003, 7);
  for (int i = 0; i < 40; ++i) p /= Rational(1000003, 7);
  CHECK(p == Rational(1));
  CHECK(p.is_one());
}

TEST_CASE("radical products from the spec", "[exact]") {
  const auto r2 = RadicalRational::radical(1, 2);
  const auto r3 = RadicalRational::radical(1, 3);
  const auto r6 = RadicalRational::radical(1, 6);
  CHECK(r2 * r2 == RadicalRational(2));
  CHECK(r2 * r6 == RadicalRational::radical(2, 3));
  CHECK(((RadicalRational(1) + r3) * (RadicalRational(1) - r3)) == RadicalRational(-2));
  CHECK(RadicalRational::radical(1, 8) == RadicalRational::radical(2, 2));
  CHECK(RadicalRational::radical(1, 12).str() == "2*sqrt(3)");
}

TEST_CASE("radical text is canonical and parses back", "[exact]") {
  const RadicalRational x = RadicalRational(Rational(1, 2)) + RadicalRational::radical(Rational(-3, 4), 5) +
                            RadicalRational::radical(2, 3);
  CHECK(x.str() == "1/2 + 2*sqrt(3) - 3/4*sqrt(5)");
  CHECK(RadicalRational::parse(x.str()) == x);
  CHECK(RadicalRational::parse("-sqrt(2)") == -RadicalRational::radical(1, 2));
  CHECK(RadicalRational().str() == "0");
  oracle::Random rng(5);
  for (int k = 0; k < 200; ++k) {
    const auto r = rng.radical();
    CHECK(RadicalRational::parse(r.str()) == r);
  }
}

TEST_CASE("sqrt of positive rationals", "[exact]") {
  CHECK(sqrt_of_positive_rational(1) == RadicalRational(1));
  CHECK(sqrt_of_positive_rational(Rational(3, 4)) == RadicalRational::radical(Rational(1, 2), 3));
  CHECK(sqrt_of_positive_rational(Rational(8, 9)) == RadicalRational::radical(Rational(2, 3), 2));
  CHECK_THROWS_AS(sqrt_of_positive_rational(0), DomainError);
  CHECK_THROWS_AS(sqrt_of_positive_rational(Rational(-1, 4)), DomainError);

  oracle::Random rng(200);
  for (int k = 0; k < 200; ++k) {
    const Rational q(rng.uniform(1, 10000), rng.uniform(1, 10000));
    const RadicalRational r = sqrt_of_positive_rational(q);
    CHECK(r * r == RadicalRational(q));
    CHECK(r.is_single_term());
    for (const auto& t : r.terms()) CHECK(t.coeff.sign() > 0);
  }
}

TEST_CASE("radical ring axioms on random triples against the Q(sqrt2, sqrt3) model", "[exact]") {
  oracle::Random rng(77);
  for (int k = 0; k < 300; ++k) {
    const auto a = rng.radical();
    const auto b = rng.radical();
    const auto c = rng.radical();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(oracle::to_q23(a * b) == oracle::to_q23(a) * oracle::to_q23(b));
    CHECK(oracle::to_q23(a + b) == oracle::to_q23(a) + oracle::to_q23(b));
  }
}

TEST_CASE("radical inversion is limited to single terms", "[exact]") {
  const auto x = RadicalRational::radical(Rational(3, 5), 7);
  CHECK(x * x.inverse() == RadicalRational(1));
  CHECK((x.inverse()).str() == "5/21*sqrt(7)");
  CHECK_THROWS_AS((RadicalRational(1) + RadicalRational::radical(1, 2)).inverse(), DomainError);
  CHECK_THROWS_AS(RadicalRational().inverse(), DomainError);
}

TEST_CASE("polynomial products from the spec", "[exact]") {
  const auto p = [](std::string_view s) { return Polynomial::parse(s, VarFamily::x, 2); };
  CHECK(p("x1 - x2") * p("1") == p("x1 - x2"));
  CHECK(p("x1 - x2") * p("x1 + x2") == p("x1^2 - x2^2"));
  CHECK((p("x1 - x2") * p("x1 - x2")).str() == "x1^2 - 2*x1*x2 + x2^2");
  CHECK_THROWS_AS(p("x1") * Polynomial::parse("y1", VarFamily::y, 2), UsageError);
  CHECK_THROWS_AS(p("x1") * Polynomial::parse("x1", VarFamily::x, 3), UsageError);
}

TEST_CASE("polynomial substitution", "[exact]") {
  const std::vector<Rational> pt{0, 0, 1, 1, 2};
  const auto p = [](std::string_view s) { return Polynomial::parse(s, VarFamily::x, 5); };
  const auto tc = p("x1 - x2") * p("x1 - x3") * p("x2 - x3") * p("x4 - x5");
  const auto tr = p("x1 - x3") * p("x1 - x5") * p("x3 - x5") * p("x2 - x4");
  CHECK(tc.substitute(pt).is_zero());
  CHECK(tr.substitute(pt) == Polynomial::constant(2, VarFamily::x, 5));
  const std::vector<Rational> two{0, 1};
  CHECK(Polynomial::parse("x1 - x2", VarFamily::x, 2).substitute(two) == Polynomial::constant(-1, VarFamily::x, 2));
  CHECK_THROWS_AS(tc.substitute(two), UsageError);
  CHECK_THROWS_AS(Polynomial::parse("y1", VarFamily::y, 1).substitute(std::vector<Rational>{1}), UsageError);
}

TEST_CASE("substitution is a ring homomorphism and degrees add", "[exact]") {
  oracle::Random rng(3);
  for (int k = 0; k < 100; ++k) {
    const int n = rng.uniform(1, 5);
    const auto a = rng.polynomial(n, rng.uniform(1, 6), 3);
    const auto b = rng.polynomial(n, rng.uniform(1, 6), 3);
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) pt.push_back(rng.rational(5));
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
  }
}

TEST_CASE("polynomial ring axioms with radical coefficients", "[exact]") {
  oracle::Random rng(19);
  for (int k = 0; k < 60; ++k) {
    const auto a = rng.polynomial(3, 4, 2) * rng.radical();
    const auto b = rng.polynomial(3, 4, 2);
    const auto c = rng.polynomial(3, 4, 2) * rng.radical();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("polynomial text round trip and canonical order", "[exact]") {
  const auto p = Polynomial::parse("x2 + x1^2 - 3/2*x1*x3 + 1", VarFamily::x, 3);
  CHECK(p.str() == "x1^2 - 3/2*x1*x3 + x2 + 1");
  CHECK(Polynomial::parse(p.str(), VarFamily::x, 3) == p);
  const auto q = Polynomial::parse("(1/2 + sqrt(3))*y1*y2 - y2^3", VarFamily::y, 2);
  CHECK(q.str() == "(1/2 + sqrt(3))*y1*y2 - y2^3");
  CHECK(Polynomial::parse(q.str(), VarFamily::y, 2) == q);
  CHECK(Polynomial(VarFamily::x, 2).str() == "0");
  oracle::Random rng(8);
  for (int k = 0; k < 100; ++k) {
    const auto r = rng.polynomial(4, 5, 3) * rng.radical();
    CHECK(Polynomial::parse(r.str(), VarFamily::x, 4) == r);
  }
}

TEST_CASE("exact division and monomial content", "[exact]") {
  oracle::Random rng(23);
  for (int k = 0; k < 50; ++k) {
    const auto a = rng.polynomial(3, 4, 2);
    const auto b = rng.polynomial(3, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    const auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  const auto x = Polynomial::parse("x1^2 + x2", VarFamily::x, 2);
  CHECK_FALSE(x.divide_exact(Polynomial::parse("x1", VarFamily::x, 2)).has_value());
  const auto m = Polynomial::parse("2*x1^2*x2 - x1^3*x2^2", VarFamily::x, 2);
  CHECK(m.monomial_content().str(VarFamily::x) == "x1^2*x2");
  CHECK(m.divided_by_monomial(m.monomial_content()) == Polynomial::parse("2 - x1*x2", VarFamily::x, 2));
}
