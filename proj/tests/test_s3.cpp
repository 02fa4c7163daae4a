#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "poisson/errors.hpp"
#include "poisson/nilcone.hpp"
#include "poisson/s3.hpp"
#include "support.hpp"

using namespace poisson;
using namespace test_support;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }
S3Variety V(const std::string& lambda, const std::string& mu) { return S3Variety(P(lambda), P(mu)); }

template <typename F>
void for_each_variety(int max_size, F f) {
  for (int n = 1; n <= max_size; ++n) {
    const auto parts = all_partitions(n);
    for (const auto& lambda : parts)
      for (const auto& mu : parts)
        if (dominance_leq(mu, lambda)) f(S3Variety(lambda, mu));
  }
}

}  // namespace

TEST_CASE("construction") {
  CHECK(V("3,1", "1^4").dimension() == 2 * (6 - 1));
  CHECK_THROWS_AS(V("2,2", "3,1"), ParseError);
  CHECK_THROWS_AS(V("2", "1"), SizeMismatch);
}

TEST_CASE("intersection cohomology") {
  const auto x = var("x");
  CHECK(s3_ih_poly(V("2", "1,1")) == 1);
  CHECK(s3_ih_poly(V("3,1", "3,1")) == 1);
  CHECK(s3_ih_poly(V("3", "1,1,1")) == 1);
  CHECK(s3_ih_poly(V("3,1", "1^4")) == x.pow(4) + x.pow(2) + 1);
  CHECK(s3_ih_poly(V("2,1", "1,1,1")) == x * x + 1);
}

TEST_CASE("x = 0 series") {
  CHECK(s3_p_zero(V("2,1", "2,1")) == 1);
  CHECK(s3_p_zero(V("2", "1,1")) == 1);
  CHECK(s3_p_zero(V("3,1", "1^4")) == 1);
  // (1^3) in (3): lambda^t = (1^3), mu^t = (3), so y^6 K_{(3),(1^3)}(y^-2) = 1.
  CHECK(s3_p_zero(V("3", "1,1,1")) == 1);
}

TEST_CASE("Poincare examples") {
  CHECK(s3_poincare(V("2,2", "2,2")) == 1);
  const auto sl2 = s3_poincare(V("2", "1,1"));
  CHECK(sl2 == 1 + mono2(2, -2));
  CHECK(sl2 == conjecture_poincare(CartanType::parse("A1")));
}

TEST_CASE("specializations") {
  for_each_variety(6, [](const S3Variety& v) {
    INFO(v.lambda().to_string() << " / " << v.mu().to_string());
    const auto p = s3_poincare(v);
    const auto at_y1 = p.substitute("y", 1).with_variables({"x"});
    // P(0, 1) is the dimension of HP_0, a Kostka number; it is 1 only in
    // special cases such as mu = (1^r).
    const auto hp0 = kostka(v.mu().conjugate(), v.lambda().conjugate()).evaluate({{"t", 1}});
    CHECK(hp0 >= 1);
    CHECK(Rational(at_y1.constant_term()) == hp0);
    if (v.mu() == Partition::column(v.rank())) CHECK(at_y1.constant_term() == 1);
    for (const auto& [e, c] : at_y1.terms()) CHECK(c > 0);
    CHECK(p.substitute("x", 0).with_variables({"y"}) == s3_p_zero(v));
  });
}

TEST_CASE("degree support") {
  for_each_variety(6, [](const S3Variety& v) {
    INFO(v.lambda().to_string() << " / " << v.mu().to_string());
    const auto p = s3_poincare(v);
    const int d = v.dimension();
    CHECK(p.min_degree("x") >= 0);
    CHECK(p.max_degree("x") <= d);
    CHECK(p.min_degree("y") >= -d);
    const int upper = 2 * (v.lambda().conjugate().n_stat() - v.mu().conjugate().n_stat());
    CHECK(p.max_degree("y") <= upper);
  });
  // The y-support is not confined to nonpositive degrees.
  CHECK(s3_poincare(V("3", "2,1")).max_degree("y") > 0);
}

TEST_CASE("type A agreement with the nilpotent cone") {
  for (int r = 2; r <= 5; ++r)
    CHECK(s3_poincare(S3Variety(Partition::row(r), Partition::column(r))) ==
          conjecture_poincare({Family::A, r - 1}));
}
