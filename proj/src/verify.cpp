#include "poisson/verify.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>

#include "poisson/coxeter.hpp"
#include "poisson/hall_littlewood.hpp"
#include "poisson/hypertoric.hpp"
#include "poisson/nilcone.hpp"
#include "poisson/s3.hpp"

namespace poisson {

std::string SuiteResult::summary_line() const {
  char timing[96];
  if (limit_seconds > 0)
    std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", seconds, limit_seconds);
  else
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
  std::string line = std::string(passed() ? "PASS" : "FAIL") + " [" + std::to_string(criterion) + "] " +
                     key + ": " + description + " (" + std::to_string(cases) + " cases, " + timing + ")";
  if (!within_limit()) line += " over time limit";
  return line;
}

nlohmann::json SuiteResult::to_json() const {
  return {{"criterion", criterion}, {"key", key},         {"description", description},
          {"cases", cases},         {"failures", failures}, {"seconds", seconds},
          {"limit_seconds", limit_seconds}, {"passed", passed()}};
}

namespace {

// Runs `body` with timing and records the first failures of each check.
template <typename Body>
SuiteResult timed(int criterion, std::string key, std::string description, double limit, Body body) {
  SuiteResult r;
  r.criterion = criterion;
  r.key = std::move(key);
  r.description = std::move(description);
  r.limit_seconds = limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void expect(SuiteResult& r, const std::string& what, const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  ++r.cases;
  if (!(lhs == rhs)) r.failures.push_back(what + ": " + lhs.to_string() + " != " + rhs.to_string());
}

void expect(SuiteResult& r, const std::string& what, bool ok) {
  ++r.cases;
  if (!ok) r.failures.push_back(what);
}

void absorb(SuiteResult& r, const std::string& prefix, const Report& report) {
  for (const auto& c : report.checks) expect(r, prefix + " " + c.name, c.lhs, c.rhs);
}

LaurentPolynomial swap_xy(const LaurentPolynomial& p) {
  return p.substitute("x", LaurentPolynomial::variable("u"))
      .substitute("y", LaurentPolynomial::variable("x"))
      .substitute("u", LaurentPolynomial::variable("y"))
      .with_variables({"x", "y"});
}

}  // namespace

std::vector<CorpusEntry> acceptance_corpus() { return load_corpus("acceptance"); }

SuiteResult suite_laplacian(const std::vector<CorpusEntry>& corpus) {
  return timed(1, "laplacian", "flat-sum P equals y^-2rk Phi(x^2+1, y^-2+1, y^2)", 30, [&](SuiteResult& r) {
    for (const auto& e : corpus) {
      const auto& m = e.matroid;
      expect(r, e.name + " coloop-free", m.is_coloop_free());
      expect(r, e.name + " loop-free", m.is_loop_free());
      expect(r, e.name + " unimodular", m.is_unimodular());
      expect(r, e.name, hypertoric_poincare(m), hypertoric_poincare_via_phi(m));
    }
  });
}

SuiteResult suite_specialization(const std::vector<CorpusEntry>& corpus) {
  return timed(2, "specialization", "P(x,1) = T(x^2,1) = x^2rk h(x^-2)", 5, [&](SuiteResult& r) {
    const auto x2 = LaurentPolynomial::monomial({"x"}, {2});
    for (const auto& e : corpus) {
      const auto& m = e.matroid;
      const auto at_y1 = hypertoric_poincare(m).substitute("y", 1).with_variables({"x"});
      const auto t = m.tutte().substitute("y", 1).substitute("x", x2).with_variables({"x"});
      const auto h = (LaurentPolynomial::monomial({"x"}, {2 * m.rank()}) *
                      m.h_independence().substitute("t", LaurentPolynomial::monomial({"x"}, {-2})))
                         .with_variables({"x"});
      expect(r, e.name + " P(x,1) = T(x^2,1)", at_y1, t);
      expect(r, e.name + " T(x^2,1) = x^2rk h(x^-2)", t, h);
    }
  });
}

SuiteResult suite_gale_duality(const std::vector<CorpusEntry>& corpus) {
  return timed(3, "gale", "p_zero direct = q_ih(dual) and T_dual(x,y) = T(y,x)", 0, [&](SuiteResult& r) {
    for (const auto& e : corpus) {
      const auto& m = e.matroid;
      expect(r, e.name + " p_zero", p_zero(m), p_zero_via_dual(m));
      expect(r, e.name + " dual Tutte", m.dual().tutte(), swap_xy(m.tutte()));
    }
  });
}

SuiteResult suite_kostka_oracle(int max_size) {
  return timed(4, "kostka-oracle", "charge Kostka = Hall-Littlewood oracle, |lambda| <= " + std::to_string(max_size),
               60, [&](SuiteResult& r) {
                 for (int n = 1; n <= max_size; ++n) {
                   const auto parts = all_partitions(n);
                   for (const auto& lambda : parts)
                     for (const auto& mu : parts)
                       expect(r, "K[" + lambda.to_string() + ";" + mu.to_string() + "]", kostka(lambda, mu),
                              kostka_oracle_hl(lambda, mu));
                 }
               });
}

SuiteResult suite_type_a_kostka(int max_rank) {
  return timed(5, "type-a-kostka", "generalized Kostka of S_r = K_{nu,1^r}, r <= " + std::to_string(max_rank), 0,
               [&](SuiteResult& r) {
                 for (int rank = 2; rank <= max_rank; ++rank) {
                   const auto& w = weyl_group({Family::A, rank - 1});
                   for (const auto& nu : all_partitions(rank))
                     expect(r, "A" + std::to_string(rank - 1) + " chi=" + nu.to_string(),
                            generalized_kostka(w, nu.to_string()), kostka(nu, Partition::column(rank)));
                 }
               });
}

SuiteResult suite_type_a_same(int max_rank) {
  return timed(6, "type-a-same", "double-Kostka sum for sl_r = S3 formula for ((r),(1^r)), r <= " +
                                     std::to_string(max_rank),
               0, [&](SuiteResult& r) {
                 for (int rank = 2; rank <= max_rank; ++rank)
                   expect(r, "r=" + std::to_string(rank), conjecture_poincare({Family::A, rank - 1}),
                          s3_poincare(S3Variety(Partition::row(rank), Partition::column(rank))));
               });
}

SuiteResult suite_springer_tables() {
  return timed(7, "springer-tables", "B2 and G2 K- and h-values match the published tables", 0, [&](SuiteResult& r) {
    for (const auto* name : {"B2", "G2"}) {
      const auto report = verify_springer_case(CartanType::parse(name));
      for (const auto& c : report.checks)
        if (c.name.rfind("K[", 0) == 0 || c.name.rfind("h[", 0) == 0)
          expect(r, std::string(name) + " " + c.name, c.lhs, c.rhs);
    }
  });
}

SuiteResult suite_g2_subregular() {
  return timed(8, "g2-subregular", "G2 subregular multiplicities shifted by y^10 = 1 + 2y^4 + y^8", 0,
               [&](SuiteResult& r) {
                 const auto y = [](int e) { return LaurentPolynomial::monomial({"y"}, {e}); };
                 expect(r, "G2 subregular", subregular_slice_series(CartanType::parse("G2")),
                        y(0) + 2 * y(4) + y(8));
               });
}

SuiteResult suite_palindromicity(int max_rank) {
  return timed(9, "palindromicity", "K_chi(t^2) = t^(dim O_chi - dim O_chi*sigma) K_chi*sigma(t^2), r <= " +
                                        std::to_string(max_rank),
               30, [&](SuiteResult& r) {
                 for (int rank = 2; rank <= max_rank; ++rank)
                   absorb(r, "r=" + std::to_string(rank), verify_palindromicity(rank));
               });
}

SuiteResult suite_regular_representation() {
  return timed(10, "regular-representation", "sum_chi dim(chi) K_chi(t) = flag Poincare polynomial", 0,
               [&](SuiteResult& r) {
                 for (const auto* name : {"A1", "A2", "A3", "A4", "A5", "B2", "G2"}) {
                   const auto& w = weyl_group(CartanType::parse(name));
                   LaurentPolynomial sum = LaurentPolynomial::monomial({"t"}, {0}, 0);
                   for (const auto& chi : w.irreducibles())
                     sum += Integer(chi.degree()) * generalized_kostka(w, chi.label);
                   expect(r, name, sum.with_variables({"t"}), flag_poincare(w));
                 }
               });
}

namespace {

LaurentPolynomial random_poly(std::mt19937_64& rng) {
  static const std::vector<std::string> names{"x", "y", "t"};
  std::uniform_int_distribution<int> count(0, 4), exp(-3, 3), coef(-5, 5);
  LaurentPolynomial p = 0;
  const int terms = count(rng);
  for (int k = 0; k < terms; ++k)
    p += LaurentPolynomial::monomial(names, {exp(rng), exp(rng), exp(rng)}, coef(rng));
  return p;
}

// Polynomial with nonnegative exponents, so any substitution is defined.
LaurentPolynomial random_polynomial(std::mt19937_64& rng) {
  static const std::vector<std::string> names{"x", "y"};
  std::uniform_int_distribution<int> count(0, 4), exp(0, 3), coef(-5, 5);
  LaurentPolynomial p = 0;
  const int terms = count(rng);
  for (int k = 0; k < terms; ++k) p += LaurentPolynomial::monomial(names, {exp(rng), exp(rng)}, coef(rng));
  return p;
}

Matroid random_matroid(std::mt19937_64& rng, int max_rows, int max_cols) {
  std::uniform_int_distribution<int> rows(1, max_rows), cols(1, max_cols), entry(-2, 2);
  const int r = rows(rng), c = cols(rng);
  IntegerMatrix m(r, c);
  for (int j = 0; j < c; ++j) {
    do {
      for (int i = 0; i < r; ++i) m(i, j) = entry(rng);
    } while (m.col(j).isZero());
  }
  return Matroid::from_matrix(m);
}

}  // namespace

SuiteResult suite_properties(std::uint64_t seed, std::size_t ring_cases) {
  return timed(11, "properties", "ring laws, submodularity, broken-circuit order independence, Tutte paths", 60,
               [&](SuiteResult& r) {
                 std::mt19937_64 rng(seed);
                 for (std::size_t i = 0; i < ring_cases; ++i) {
                   const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
                   const bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) &&
                                   a * b == b * a && a * (b + c) == a * b + a * c && a - a == 0 && a + 0 == a &&
                                   a * 1 == a;
                   expect(r, "ring laws #" + std::to_string(i), ok);
                 }
                 // Substitution laws.
                 for (int i = 0; i < 500; ++i) {
                   const auto p = random_polynomial(rng), q = random_polynomial(rng);
                   expect(r, "substitute(p, x, x) = p", p.substitute("x", LaurentPolynomial::variable("x")), p);
                   std::uniform_int_distribution<int> val(-4, 4);
                   const std::map<std::string, Rational> pt{{"x", Rational(val(rng))}, {"y", Rational(val(rng))}};
                   auto shifted = pt;
                   shifted["x"] = q.evaluate(pt);
                   expect(r, "evaluate/substitute", p.substitute("x", q).evaluate(pt) == p.evaluate(shifted));
                 }

                 std::vector<Matroid> pool;
                 for (const auto& e : acceptance_corpus()) pool.push_back(e.matroid);
                 for (int i = 0; i < 40; ++i) pool.push_back(random_matroid(rng, 4, 12));

                 // Rank axioms on random subset pairs.
                 for (const auto& m : pool) {
                   expect(r, "rank(empty) = 0", m.rank(0) == 0);
                   std::uniform_int_distribution<Subset> subset(0, m.ground());
                   for (int k = 0; k < 50; ++k) {
                     const Subset a = subset(rng), b = subset(rng);
                     expect(r, "submodular", m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b));
                     expect(r, "monotone", m.rank(a & b) <= m.rank(a));
                     expect(r, "bounded", m.rank(a) <= cardinality(a));
                   }
                 }

                 // Broken-circuit complexes for random orders, l <= 8.
                 for (const auto& m : pool) {
                   if (m.size() > 8) continue;
                   const auto h = m.h_broken_circuit();
                   std::vector<std::size_t> order(m.size());
                   std::iota(order.begin(), order.end(), 0);
                   for (int k = 0; k < 6; ++k) {
                     expect(r, "broken-circuit h", m.broken_circuit_h(order), h);
                     std::shuffle(order.begin(), order.end(), rng);
                   }
                 }
                 for (int i = 0; i < 30; ++i) {
                   const auto m = random_matroid(rng, 4, 8);
                   std::vector<std::size_t> order(m.size());
                   std::iota(order.begin(), order.end(), 0);
                   std::shuffle(order.begin(), order.end(), rng);
                   expect(r, "broken-circuit h (random)", m.broken_circuit_h(order), m.h_broken_circuit());
                 }

                 // Both Tutte paths, l <= 12.
                 for (const auto& m : pool)
                   if (m.size() <= 12)
                     expect(r, "corank-nullity = deletion-contraction", m.tutte_corank_nullity(),
                            m.tutte_deletion_contraction());
               });
}

std::vector<SuiteSpec> acceptance_suites(const std::vector<CorpusEntry>& corpus) {
  return {
      {1, "laplacian", [&corpus] { return suite_laplacian(corpus); }},
      {2, "specialization", [&corpus] { return suite_specialization(corpus); }},
      {3, "gale", [&corpus] { return suite_gale_duality(corpus); }},
      {4, "kostka-oracle", [] { return suite_kostka_oracle(); }},
      {5, "type-a-kostka", [] { return suite_type_a_kostka(); }},
      {6, "type-a-same", [] { return suite_type_a_same(); }},
      {7, "springer-tables", [] { return suite_springer_tables(); }},
      {8, "g2-subregular", [] { return suite_g2_subregular(); }},
      {9, "palindromicity", [] { return suite_palindromicity(); }},
      {10, "regular-representation", [] { return suite_regular_representation(); }},
      {11, "properties", [] { return suite_properties(); }},
  };
}

}  // namespace poisson
