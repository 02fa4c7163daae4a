#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "poisson/corpus.hpp"

namespace poisson {

/// Outcome of one acceptance suite.
struct SuiteResult {
  int criterion = 0;
  std::string key;
  std::string description;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  double limit_seconds = 0;  // 0 means no limit

  bool within_limit() const { return limit_seconds <= 0 || seconds < limit_seconds; }
  bool passed() const { return failures.empty() && within_limit(); }
  /// "PASS [n] key: description (cases, time)"
  std::string summary_line() const;
  nlohmann::json to_json() const;
};

/// The hypertoric corpus used by the acceptance suites: K4, K5, C3..C6 and
/// their Gale duals.
std::vector<CorpusEntry> acceptance_corpus();

SuiteResult suite_laplacian(const std::vector<CorpusEntry>& corpus);
SuiteResult suite_specialization(const std::vector<CorpusEntry>& corpus);
SuiteResult suite_gale_duality(const std::vector<CorpusEntry>& corpus);
SuiteResult suite_kostka_oracle(int max_size = 6);
SuiteResult suite_type_a_kostka(int max_rank = 6);
SuiteResult suite_type_a_same(int max_rank = 5);
SuiteResult suite_springer_tables();
SuiteResult suite_g2_subregular();
SuiteResult suite_palindromicity(int max_rank = 6);
SuiteResult suite_regular_representation();
/// Randomized ring laws (>= `ring_cases` triples), rank submodularity,
/// broken-circuit order independence (l <= 8) and Tutte path agreement
/// (l <= 12). Deterministic for a given seed.
SuiteResult suite_properties(std::uint64_t seed = 20120417, std::size_t ring_cases = 10000);

struct SuiteSpec {
  int criterion;
  std::string key;
  std::function<SuiteResult()> run;
};

/// All acceptance suites in criterion order; the hypertoric ones run on
/// `corpus`.
std::vector<SuiteSpec> acceptance_suites(const std::vector<CorpusEntry>& corpus);

}  // namespace poisson
