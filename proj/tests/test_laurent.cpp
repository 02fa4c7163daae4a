#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "poisson/errors.hpp"
#include "poisson/laurent.hpp"
#include "support.hpp"

using namespace poisson;
using namespace test_support;

namespace {

LaurentPolynomial random_poly(std::mt19937_64& rng, int low) {
  std::uniform_int_distribution<int> count(0, 4), exp(low, 3), coef(-6, 6);
  LaurentPolynomial p = 0;
  const int terms = count(rng);
  for (int k = 0; k < terms; ++k) p += LaurentPolynomial::monomial({"x", "y"}, {exp(rng), exp(rng)}, coef(rng));
  return p;
}

std::map<std::string, Rational> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  auto nonzero = [&] {
    int n = 0;
    while (n == 0) n = num(rng);
    return Rational(n, den(rng));
  };
  return {{"x", nonzero()}, {"y", nonzero()}};
}

}  // namespace

TEST_CASE("arithmetic examples") {
  const auto x = var("x"), y = var("y");
  CHECK((x + 1) * (x - 1) == x * x - 1);
  const auto p = x * x * y + 3;
  CHECK(p + 0 == p);
  const auto s = mono("y", -1) + y;
  CHECK(s * s == mono("y", -2) + 2 + mono("y", 2));
  CHECK((x - x).is_zero());
  CHECK(x.pow(0) == 1);
  CHECK((x + y).pow(2) == x * x + 2 * x * y + y * y);
}

TEST_CASE("substitute examples") {
  const auto x = var("x");
  CHECK((x * x + x).substitute("x", x * x + 1) == x.pow(4) + 3 * x * x + 2);
  CHECK(mono("y", 3).substitute("y", mono("y", -2)) == mono("y", -6));
  CHECK_THROWS_AS(mono("x", -1).substitute("x", x + 1), NegativeExponentComposition);
  // an invertible monomial may replace a negative power
  CHECK(mono("x", -1).substitute("x", mono("y", 2)) == mono("y", -2));
  CHECK(mono("x", -2).substitute("x", -var("x")) == mono("x", -2));
}

TEST_CASE("evaluate examples") {
  CHECK(LaurentPolynomial::monomial({"x", "y"}, {2, -2}).evaluate({{"x", 2}, {"y", 2}}) == 1);
  CHECK((var("x") + var("y")).evaluate({{"x", 0}, {"y", 0}}) == 0);
  CHECK_THROWS_AS(mono("y", -1).evaluate({{"y", 0}}), DivisionByZero);
  CHECK_THROWS_AS(var("z").evaluate({{"x", 1}}), MissingVariable);
}

TEST_CASE("text form uses descending lex order") {
  const auto p = mono2(0, 0) + mono2(2, -4) + mono2(4, -4);
  CHECK(p.to_string() == "x^4*y^-4 + x^2*y^-4 + 1");
  CHECK(LaurentPolynomial(0).to_string() == "0");
  CHECK((var("t") * var("t") + var("t")).to_string() == "t^2 + t");
  CHECK((var("x") * -2 + 1).to_string() == "-2*x + 1");
  CHECK((1 - var("x")).to_string() == "-x + 1");
}

TEST_CASE("json round trip and shape") {
  const auto p = mono2(4, -4) + mono2(2, -4) + 1;
  const auto j = p.to_json();
  CHECK(j["vars"] == nlohmann::json({"x", "y"}));
  CHECK(j["terms"][0]["exp"] == nlohmann::json({4, -4}));
  CHECK(j["terms"][0]["coef"] == "1");
  CHECK(LaurentPolynomial::from_json(j) == p);
  const LaurentPolynomial big = LaurentPolynomial(Integer("123456789012345678901234567890")) * var("x");
  CHECK(LaurentPolynomial::from_json(big.to_json()) == big);
  CHECK_THROWS_AS(LaurentPolynomial::from_json(nlohmann::json::parse(R"({"vars":["x"]})")), ParseError);
}

TEST_CASE("equality aligns variable lists") {
  CHECK(var("x") + var("y") == var("y") + var("x"));
  CHECK(LaurentPolynomial::monomial({"x", "y"}, {1, 0}) == var("x"));
  CHECK((var("x") * var("y")).with_variables({"y", "x"}) == var("x") * var("y"));
  CHECK_THROWS(var("x").with_variables({"y"}));
}

TEST_CASE("exact division and rational functions") {
  const auto q = var("q");
  const auto num = 1 - q.pow(4);
  const auto den = 1 - q;
  const auto quotient = divide_exact(num, den, "q");
  REQUIRE(quotient);
  CHECK(*quotient == 1 + q + q * q + q.pow(3));
  CHECK_FALSE(divide_exact(q + 2, q * q + 1, "q"));
  const RationalFunction f(num, den);
  const RationalFunction g(1 + q, 1);
  const auto sum = (f + g).to_polynomial("q");
  REQUIRE(sum);
  CHECK(*sum == 2 + 2 * q + q * q + q.pow(3));
  CHECK(RationalFunction(q * q - 1, q - 1) == RationalFunction(q + 1, 1));
}

TEST_CASE("ring laws against evaluation at random points") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_poly(rng, -3), b = random_poly(rng, -3), c = random_poly(rng, -3);
    const auto pt = random_point(rng);
    // Oracle: the evaluation map is a ring homomorphism.
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("substitution laws") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto p = random_poly(rng, -3);
    CHECK(p.substitute("x", var("x")) == p);
    CHECK(p.substitute("y", var("y")) == p);
    const auto poly = random_poly(rng, 0), q = random_poly(rng, 0);
    auto pt = random_point(rng);
    const Rational before = poly.substitute("x", q).evaluate(pt);
    pt["x"] = q.evaluate(pt);
    CHECK(before == poly.evaluate(pt));
  }
}
