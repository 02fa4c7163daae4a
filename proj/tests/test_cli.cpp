#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "poisson/cli.hpp"
#include "poisson/corpus.hpp"
#include "poisson/errors.hpp"
#include "poisson/matroid.hpp"

using namespace poisson;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("examples") {
  const auto h = run({"hypertoric", "--matrix", "[[1,0,1],[0,1,1]]", "--format", "text"});
  CHECK(h.code == 0);
  CHECK(h.out == "x^4*y^-4 + x^2*y^-4 + 1\n");
  const auto k = run({"kostka", "--lambda", "2,1", "--mu", "1,1,1"});
  CHECK(k.code == 0);
  CHECK(k.out == "t^2 + t\n");
  CHECK(run({"kostka", "--lambda", "2,1", "--mu", "1^3", "--oracle"}).out == "t^2 + t\n");
  CHECK(run({"verify", "laplacian", "--corpus", "graphic:K4"}).code == 0);
}

TEST_CASE("matroid commands") {
  CHECK(run({"tutte", "--matrix", "[[1,0,1],[0,1,1]]"}).out == "x^2 + x + y\n");
  CHECK(run({"denham", "--matrix", "[[1,0,1],[0,1,1]]"}).out == "x^2 - x + y*b^3 - b^3\n");
  CHECK(run({"hypertoric", "--matrix", "[[1,0,1],[0,1,1]]", "--op", "q-ih"}).out == "x^2 + 1\n");
  CHECK(run({"hypertoric", "--matrix", "{\"matrix\": [[1,0,1],[0,1,1]]}", "--op", "p-zero"}).out == "1\n");
  CHECK(run({"hypertoric", "--matrix", "[[1,0,1],[0,1,1]]", "--op", "verify"}).code == 0);
  const auto j = run_json({"hypertoric", "--matrix", "[[1,0,1],[0,1,1]]"});
  CHECK(j["text"] == "x^4*y^-4 + x^2*y^-4 + 1");
  CHECK(j["unimodular"] == true);
  CHECK(j["status"] == "theorem");
  CHECK(j["polynomial"]["vars"] == nlohmann::json({"x", "y"}));
}

TEST_CASE("non-unimodular input is computed with a warning") {
  const auto r = run({"hypertoric", "--matrix", "[[1,0,1],[0,1,2]]"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  const auto j = run_json({"hypertoric", "--matrix", "[[1,0,1],[0,1,2]]"});
  CHECK(j["unimodular"] == false);
  CHECK(j["warnings"].size() == 1);
}

TEST_CASE("status metadata") {
  CHECK(run_json({"s3", "--lambda", "3,1", "--mu", "1^4"})["status"] == "conditional");
  CHECK(run_json({"s3", "--lambda", "3,1", "--mu", "1^4", "--at-x0"})["status"] == "conditional");
  CHECK(run_json({"s3", "--lambda", "3,1", "--mu", "1^4", "--ih"})["status"] == "theorem");
  CHECK(run({"s3", "--lambda", "3,1", "--mu", "1^4", "--ih"}).out == "x^4 + x^2 + 1\n");
  const auto cone = run_json({"cone", "--type", "G2"});
  CHECK(cone["status"] == "theorem");
  CHECK(run({"cone", "--type", "B2", "--chi", "h"}).out == "y^-2 + y^-6\n");
}

TEST_CASE("coxeter and cone") {
  CHECK(run({"coxeter", "--type", "B2", "--op", "kostka", "--chi", "h"}).out == "t^3 + t\n");
  CHECK(run({"coxeter", "--type", "G2", "--op", "multiplicity", "--chi", "sigma"}).out == "q^6\n");
  CHECK(run({"coxeter", "--type", "A1", "--op", "flag"}).out == "t + 1\n");
  const auto chars = run_json({"coxeter", "--type", "B2", "--op", "characters"});
  CHECK(chars["characters"].size() == 5);
  CHECK(run({"cone", "--type", "G2", "--verify"}).code == 0);
  CHECK(run({"cone", "--type", "A3", "--verify"}).code == 0);
  CHECK(run({"cone", "--type", "A1"}).out == "x^2*y^-2 + 1\n");
}

TEST_CASE("usage errors name the flag") {
  const auto missing = run({"kostka", "--lambda", "2,1"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--mu") != std::string::npos);
  const auto bad = run({"kostka", "--lambda", "1,2", "--mu", "1,1,1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--lambda") != std::string::npos);
  const auto matrix = run({"tutte", "--matrix", "[[1,0],[0"});
  CHECK(matrix.code == 2);
  CHECK(matrix.err.find("--matrix") != std::string::npos);
  const auto type = run({"coxeter", "--type", "E8", "--op", "flag"});
  CHECK(type.code == 2);
  CHECK(type.err.find("--type") != std::string::npos);
  const auto chi = run({"cone", "--type", "B2", "--chi", "nope"});
  CHECK(chi.code == 2);
  CHECK(chi.err.find("--chi") != std::string::npos);
  const auto format = run({"tutte", "--matrix", "[[1]]", "--format", "xml"});
  CHECK(format.code == 2);
  CHECK(format.err.find("--format") != std::string::npos);
  const auto s3 = run({"s3", "--lambda", "2,2", "--mu", "3,1"});
  CHECK(s3.code == 2);
  CHECK(s3.err.find("--mu") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  const auto corpus = run({"verify", "laplacian", "--corpus", "graphic:K9"});
  CHECK(corpus.code == 2);
  CHECK(corpus.err.find("--corpus") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("computation errors") {
  const auto loop = run({"tutte", "--matrix", "[[1,0],[0,0]]"});
  CHECK(loop.code == 1);
  CHECK(loop.err.find("error") != std::string::npos);
}

TEST_CASE("verification failure exit code") {
  // A coloop violates the hypotheses: the y = 1 and x = 0 comparisons still
  // hold, but the laplacian suite requires coloop-free input.
  const std::string path = "cli_test_coloop.json";
  {
    std::ofstream f(path);
    f << "[[1,0,1],[0,1,0]]";
  }
  const auto r = run({"verify", "laplacian", "--corpus", "file:" + path});
  std::remove(path.c_str());
  CHECK(r.code == 3);
  CHECK(r.out.rfind("FAIL [1]", 0) == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"hypertoric", "--matrix", "[[1,1,1,0,0,0],[-1,0,0,1,1,0],[0,-1,0,-1,0,1]]",
                                      "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const auto v1 = run({"verify", "type-a-same", "--format", "json"});
  CHECK(v1.code == 0);
  auto j = nlohmann::json::parse(v1.out);
  CHECK(j["passed"] == true);
  CHECK(j["suites"][0]["key"] == "type-a-same");
}

TEST_CASE("corpus loading") {
  const auto k4 = load_corpus("graphic:K4");
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].matroid.rank() == 3);
  CHECK(k4[0].matroid.size() == 6);
  CHECK(k4[0].matroid.tutte().evaluate({{"x", 1}, {"y", 1}}) == 16);
  const auto c3 = load_corpus("graphic:cycle_3");
  CHECK(c3[0].matroid.tutte() == Matroid::from_rows({{1, 0, 1}, {0, 1, 1}}).tutte());
  CHECK_THROWS_AS(load_corpus("file:missing.json"), UnknownCorpus);
  CHECK_THROWS_AS(load_corpus("graphic:K7"), UnknownCorpus);
  CHECK_THROWS_AS(load_corpus("bogus"), UnknownCorpus);
  const auto acceptance = load_corpus("acceptance");
  CHECK(acceptance.size() >= 10);
  for (const auto& e : acceptance) {
    CHECK(e.matroid.is_coloop_free());
    CHECK(e.matroid.is_unimodular());
  }
}
