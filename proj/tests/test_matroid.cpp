#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "oracle_matroid.hpp"
#include "poisson/corpus.hpp"
#include "poisson/errors.hpp"
#include "poisson/matroid.hpp"
#include "support.hpp"

using namespace poisson;
using namespace test_support;

namespace {

const oracle::Rows kU23{{1, 0, 1}, {0, 1, 1}};
const oracle::Rows kBoolean2{{1, 0}, {0, 1}};

LaurentPolynomial xy(int ex, int ey, int c = 1) { return mono2(ex, ey, c); }

LaurentPolynomial swap_xy(const LaurentPolynomial& p) {
  return p.substitute("x", var("u")).substitute("y", var("x")).substitute("u", var("y"));
}

oracle::Rows random_rows(std::mt19937_64& rng, int max_rows, int max_cols, int spread) {
  std::uniform_int_distribution<int> rows(1, max_rows), cols(1, max_cols), entry(-spread, spread);
  const int r = rows(rng), c = cols(rng);
  oracle::Rows m(static_cast<std::size_t>(r), std::vector<long long>(static_cast<std::size_t>(c)));
  for (int j = 0; j < c; ++j) {
    bool zero = true;
    while (zero) {
      for (int i = 0; i < r; ++i) m[i][j] = entry(rng);
      for (int i = 0; i < r; ++i) zero = zero && m[i][j] == 0;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("construction") {
  const auto m = Matroid::from_rows(kU23);
  CHECK(m.size() == 3);
  CHECK(m.rank() == 2);
  const auto coloop = Matroid::from_rows({{1}});
  CHECK(coloop.rank() == 1);
  CHECK(coloop.coloops() == 1);
  CHECK_THROWS_AS(Matroid::from_rows({{1, 0}, {0, 0}}), LoopPresent);
}

TEST_CASE("rank") {
  const auto m = Matroid::from_rows(kU23);
  CHECK(m.rank(subset_of({0, 1})) == 2);
  CHECK(m.rank(0) == 0);
  CHECK(m.rank(subset_of({0, 1, 2})) == 2);
  CHECK(m.rank(subset_of({2})) == 1);
}

TEST_CASE("unimodularity") {
  CHECK(Matroid::from_rows(kU23).is_unimodular());
  CHECK_FALSE(Matroid::from_rows({{1, 0, 1}, {0, 1, 2}}).is_unimodular());
  CHECK(Matroid::from_rows({{1}}).is_unimodular());
  CHECK_FALSE(Matroid::from_rows({{2}}).is_unimodular());
  for (int n : {3, 4, 5}) CHECK(complete_graph(n).is_unimodular());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const auto rows = random_rows(rng, 3, 5, 1);
    CHECK(Matroid::from_rows(rows).is_unimodular() == oracle::unimodular(rows));
  }
}

TEST_CASE("flats") {
  const auto f = Matroid::from_rows(kU23).flats();
  REQUIRE(f.size() == 5);
  CHECK(f[0].elements == 0);
  CHECK(f[4].elements == 0b111);
  const auto boolean = Matroid::from_rows(kBoolean2).flats();
  CHECK(boolean.size() == 4);
  const auto empty = Matroid::from_matrix(IntegerMatrix(0, 0)).flats();
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].elements == 0);
}

TEST_CASE("flats agree with a brute-force closure oracle") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto rows = random_rows(rng, 3, 7, 2);
    const auto m = Matroid::from_rows(rows);
    std::vector<Subset> got;
    for (const auto& f : m.flats()) {
      got.push_back(f.elements);
      CHECK(f.rank == oracle::rank_of(rows, f.elements));
      CHECK(m.is_flat(f.elements));
    }
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::flats(rows));
  }
}

TEST_CASE("coloops") {
  CHECK(Matroid::from_rows(kU23).coloops() == 0);
  CHECK(Matroid::from_rows(kU23).is_coloop_free());
  CHECK(Matroid::from_rows({{1}}).coloops() == 0b1);
  CHECK(Matroid::from_rows(kBoolean2).coloops() == 0b11);
}

TEST_CASE("minors") {
  const auto m = Matroid::from_rows(kU23);
  const auto flats = m.flats();
  const Flat whole = flats.back();
  CHECK(m.localize(whole).tutte() == m.tutte());
  CHECK(m.localize(flats.front()).size() == 0);
  CHECK(m.localize(flats.front()).tutte() == 1);
  const Flat e0{subset_of({0}), 1};
  CHECK(m.localize(e0).tutte() == var("x"));
  CHECK(m.restrict_flat(flats.front()).tutte() == m.tutte());
  CHECK(m.restrict_flat(whole).size() == 0);
  const Flat e2{subset_of({2}), 1};
  CHECK(m.restrict_flat(e2).tutte() == var("x") + var("y"));
  CHECK_THROWS_AS(m.restrict_flat(Flat{subset_of({0, 1}), 2}), NotAFlat);
}

TEST_CASE("dual") {
  const auto d = Matroid::from_rows(kU23).dual();
  CHECK(d.rank() == 1);
  CHECK(d.size() == 3);
  CHECK(d.tutte() == var("x") + var("y") + var("y") * var("y"));
  const auto loops = Matroid::from_rows(kBoolean2).dual();
  CHECK(loops.rank() == 0);
  CHECK(loops.loops() == 0b11);
}

TEST_CASE("Tutte examples") {
  CHECK(Matroid::from_rows(kU23).tutte() == xy(2, 0) + xy(1, 0) + xy(0, 1));
  CHECK(Matroid::from_rows({{1}}).tutte() == var("x"));
  CHECK(Matroid::from_rows(kBoolean2).tutte() == xy(2, 0));
  // K4 has 16 spanning trees.
  CHECK(complete_graph(4).tutte().evaluate({{"x", 1}, {"y", 1}}) == 16);
}

TEST_CASE("Tutte agrees with the brute-force oracle") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const auto rows = random_rows(rng, 4, 8, 2);
    const auto m = Matroid::from_rows(rows);
    CHECK(m.tutte() == oracle::tutte(rows));
  }
}

TEST_CASE("Tutte paths agree up to 12 elements") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 25; ++i) {
    const auto m = Matroid::from_rows(random_rows(rng, 4, 12, 2));
    CHECK(m.tutte_corank_nullity() == m.tutte_deletion_contraction());
  }
  CHECK(complete_graph(5).tutte_corank_nullity() == complete_graph(5).tutte_deletion_contraction());
}

TEST_CASE("deletion-contraction beyond the exhaustive limit") {
  // The 24-cycle has T = y + x + ... + x^23.
  const auto c24 = cycle_graph(24);
  const auto x = var("x");
  LaurentPolynomial expected = var("y");
  for (int k = 1; k < 24; ++k) expected += x.pow(static_cast<unsigned>(k));
  CHECK(c24.tutte() == expected);
  CHECK(c24.dual().tutte() == swap_xy(expected));
}

TEST_CASE("duality and loop/coloop specializations") {
  std::vector<Matroid> pool;
  for (const auto& e : load_corpus("acceptance")) pool.push_back(e.matroid);
  pool.push_back(Matroid::from_rows({{1, 0, 1}, {0, 1, 0}}));
  for (const auto& m : pool) {
    CHECK(m.dual().tutte() == swap_xy(m.tutte()));
    if (!m.is_coloop_free()) CHECK(m.tutte().substitute("x", 0).is_zero());
    const auto d = m.dual();
    if (!d.is_loop_free()) CHECK(d.tutte().substitute("y", 0).is_zero());
  }
}

TEST_CASE("localizations and contractions of flats are loop-free") {
  for (const auto* name : {"graphic:K4", "graphic:cycle_4", "graphic:K4*"}) {
    const auto m = load_corpus(name).front().matroid;
    for (const auto& f : m.flats()) {
      CHECK(m.localize(f).is_loop_free());
      CHECK(m.restrict_flat(f).is_loop_free());
    }
  }
}

TEST_CASE("characteristic polynomial and h") {
  const auto x = var("x"), t = var("t");
  CHECK(Matroid::from_rows(kU23).char_poly() == x * x - 3 * x + 2);
  CHECK(Matroid::from_rows({{1}}).char_poly() == x - 1);
  CHECK(Matroid::from_rows(kBoolean2).char_poly() == (x - 1) * (x - 1));
  CHECK(Matroid::from_rows(kU23).h_broken_circuit() == 1 + t);
  CHECK(Matroid::from_rows(kBoolean2).h_broken_circuit() == 1);
  CHECK(Matroid::from_rows({{1}}).h_broken_circuit() == 1);
  CHECK(Matroid::from_rows(kU23).h_independence() == 1 + t + t * t);
}

TEST_CASE("broken-circuit h is independent of the ordering") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const auto m = Matroid::from_rows(random_rows(rng, 3, 8, 1));
    const auto h = m.h_broken_circuit();
    std::vector<std::size_t> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    for (int k = 0; k < 5; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(m.broken_circuit_h(order) == h);
    }
  }
}

TEST_CASE("h of the independence complex is t^rk T(1/t, 1)") {
  for (const auto& e : load_corpus("acceptance")) {
    const auto& m = e.matroid;
    const auto t = var("t");
    const auto expected = (LaurentPolynomial::monomial({"t"}, {m.rank()}) *
                           m.tutte().substitute("y", 1).substitute("x", mono("t", -1)))
                              .with_variables({"t"});
    CHECK(m.h_independence() == expected);
  }
}

TEST_CASE("concurrent rank queries agree") {
  const auto m = complete_graph(6);
  const auto serial = m.tutte_corank_nullity();
  std::vector<LaurentPolynomial> results(4);
  std::vector<std::thread> threads;
  const auto copy = m;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&, i] { results[i] = (i % 2 ? copy : m).tutte_corank_nullity(); });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == serial);
}
