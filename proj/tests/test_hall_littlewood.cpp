#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "poisson/errors.hpp"
#include "poisson/hall_littlewood.hpp"
#include "poisson/partitions.hpp"
#include "support.hpp"

using namespace poisson;
using namespace test_support;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("oracle examples") {
  const auto t = var("t");
  CHECK(kostka_oracle_hl(P("2"), P("1,1")) == t);
  CHECK(kostka_oracle_hl(P("2,1"), P("2,1")) == 1);
  CHECK(kostka_oracle_hl(P("2,1"), P("1,1,1")) == t + t * t);
  CHECK(kostka_oracle_hl(P("1,1,1"), P("2,1")).is_zero());
}

TEST_CASE("oracle is unitriangular and matches the charge formula up to size 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto parts = all_partitions(n);
    for (const auto& lambda : parts)
      for (const auto& mu : parts) {
        const auto k = kostka_oracle_hl(lambda, mu);
        if (lambda == mu) CHECK(k == 1);
        CHECK(k == kostka(lambda, mu));
      }
  }
}

TEST_CASE("Schur expansion of Hall-Littlewood P") {
  // P_(1,1) = s_(1,1); P_(2) = s_(2) - t s_(1,1).
  const auto t = var("t");
  CHECK(hall_littlewood_schur_coefficient(P("1,1"), P("1,1")) == 1);
  CHECK(hall_littlewood_schur_coefficient(P("1,1"), P("2")).is_zero());
  CHECK(hall_littlewood_schur_coefficient(P("2"), P("2")) == 1);
  CHECK(hall_littlewood_schur_coefficient(P("2"), P("1,1")) == -t);
}

TEST_CASE("size limit") {
  CHECK_THROWS_AS(kostka_oracle_hl(P("9"), P("1^9")), ScaleExceeded);
  CHECK_THROWS_AS(kostka_oracle_hl(P("2"), P("1")), SizeMismatch);
}
