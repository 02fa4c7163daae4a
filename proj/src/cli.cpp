#include "poisson/cli.hpp"

#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "poisson/corpus.hpp"
#include "poisson/coxeter.hpp"
#include "poisson/errors.hpp"
#include "poisson/hall_littlewood.hpp"
#include "poisson/hypertoric.hpp"
#include "poisson/nilcone.hpp"
#include "poisson/s3.hpp"
#include "poisson/verify.hpp"

namespace poisson::cli {

namespace {

using nlohmann::json;

// A flag value that could not be interpreted.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& why)
      : std::runtime_error("invalid value for " + flag + ": " + why) {}
};

// Some verification ran and failed; output has already been written.
struct VerificationFailed {};

struct Options {
  std::string format = "text";
  std::string matrix;
  std::string lambda;
  std::string mu;
  std::string type;
  std::string chi;
  std::string corpus;
  std::string op;
  std::string suite;
  bool oracle = false;
  bool at_x0 = false;
  bool ih = false;
  bool verify = false;

  bool json() const { return format == "json"; }
};

template <typename F>
auto parse_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw UsageError(flag, e.what());
  } catch (const UnsupportedType& e) {
    throw UsageError(flag, e.what());
  }
}

Partition partition_flag(const std::string& flag, const std::string& text) {
  if (text.empty()) throw UsageError(flag, "required");
  return parse_flag(flag, [&] { return Partition::parse(text); });
}

CartanType type_flag(const std::string& text) {
  if (text.empty()) throw UsageError("--type", "required");
  return parse_flag("--type", [&] { return CartanType::parse(text); });
}

void print(std::ostream& out, const Options& o, const json& j) {
  if (o.json())
    out << j.dump(2) << '\n';
  else
    out << j.at("text").get<std::string>() << '\n';
}

json polynomial_json(const LaurentPolynomial& p) {
  return {{"text", p.to_string()}, {"polynomial", p.to_json()}};
}

// Loads --matrix and reports unimodularity; non-unimodular input is
// computed anyway with a warning.
struct MatrixInput {
  Matroid matroid;
  json meta;
};

MatrixInput matrix_input(const Options& o, std::ostream& err) {
  if (o.matrix.empty()) throw UsageError("--matrix", "required");
  Matroid m = parse_flag("--matrix", [&] { return parse_matrix(o.matrix); });
  json meta = {{"rank", m.rank()}, {"elements", m.size()}};
  json warnings = json::array();
  const bool unimodular = m.is_unimodular();
  meta["unimodular"] = unimodular;
  meta["coloop_free"] = m.is_coloop_free();
  if (!unimodular) warnings.push_back("matrix is not totally unimodular; identities are not guaranteed");
  if (!m.is_coloop_free()) warnings.push_back("matroid has coloops");
  meta["warnings"] = warnings;
  if (!o.json())
    for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << '\n';
  return {std::move(m), std::move(meta)};
}

json merge(json a, const json& b) {
  a.update(b);
  return a;
}

void cmd_tutte(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = matrix_input(o, err);
  print(out, o, merge(polynomial_json(in.matroid.tutte()), in.meta));
}

void cmd_denham(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = matrix_input(o, err);
  print(out, o, merge(polynomial_json(denham_phi(in.matroid)), in.meta));
}

void cmd_hypertoric(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = matrix_input(o, err);
  const auto& m = in.matroid;
  const std::string op = o.op.empty() ? "poincare" : o.op;
  if (op == "verify") {
    const auto report = verify_laplacian(m);
    if (o.json()) {
      out << merge(report.to_json(), in.meta).dump(2) << '\n';
    } else {
      for (const auto& c : report.checks)
        out << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.lhs << " | " << c.rhs << '\n';
    }
    if (!report.passed()) throw VerificationFailed{};
    return;
  }
  LaurentPolynomial p;
  if (op == "poincare")
    p = hypertoric_poincare(m);
  else if (op == "via-phi")
    p = hypertoric_poincare_via_phi(m);
  else if (op == "q-ih")
    p = q_ih(m);
  else if (op == "p-zero")
    p = p_zero(m);
  else
    throw UsageError("--op", "'" + op + "' (expected poincare, via-phi, q-ih, p-zero or verify)");
  auto j = merge(polynomial_json(p), in.meta);
  j["status"] = kTheorem;
  print(out, o, j);
}

void cmd_kostka(const Options& o, std::ostream& out, std::ostream&) {
  const auto lambda = partition_flag("--lambda", o.lambda);
  const auto mu = partition_flag("--mu", o.mu);
  if (lambda.size() != mu.size()) throw UsageError("--mu", "size differs from --lambda");
  const auto k = o.oracle ? kostka_oracle_hl(lambda, mu) : kostka(lambda, mu);
  auto j = polynomial_json(k);
  j["lambda"] = lambda.to_string();
  j["mu"] = mu.to_string();
  j["method"] = o.oracle ? "hall-littlewood" : "charge";
  print(out, o, j);
}

void cmd_s3(const Options& o, std::ostream& out, std::ostream&) {
  const auto lambda = partition_flag("--lambda", o.lambda);
  const auto mu = partition_flag("--mu", o.mu);
  if (o.at_x0 && o.ih) throw UsageError("--ih", "cannot be combined with --at-x0");
  if (lambda.size() != mu.size()) throw UsageError("--mu", "size differs from --lambda");
  if (!dominance_leq(mu, lambda)) throw UsageError("--mu", "must be dominated by --lambda");
  const S3Variety v(lambda, mu);
  json j;
  if (o.ih) {
    j = polynomial_json(s3_ih_poly(v));
    j["status"] = kTheorem;
  } else {
    j = polynomial_json(o.at_x0 ? s3_p_zero(v) : s3_poincare(v));
    j["status"] = kConditional;
  }
  j["lambda"] = lambda.to_string();
  j["mu"] = mu.to_string();
  j["dimension"] = v.dimension();
  print(out, o, j);
}

std::string chi_required(const Options& o) {
  if (o.chi.empty()) throw UsageError("--chi", "required");
  return o.chi;
}

// Looks the character up so that an unknown label is a usage error.
void check_character(const WeylGroup& w, const std::string& chi) {
  try {
    w.character(chi);
  } catch (const UnknownCharacter& e) {
    throw UsageError("--chi", e.what());
  }
}

void cmd_coxeter(const Options& o, std::ostream& out, std::ostream&) {
  const auto& w = weyl_group(type_flag(o.type));
  const std::string op = o.op.empty() ? "kostka" : o.op;
  json j;
  if (op == "kostka" || op == "multiplicity") {
    const auto chi = chi_required(o);
    check_character(w, chi);
    j = polynomial_json(op == "kostka" ? generalized_kostka(w, chi) : coinvariant_multiplicity(w, chi));
    j["chi"] = w.character(chi).label;
  } else if (op == "flag") {
    j = polynomial_json(flag_poincare(w));
  } else if (op == "characters") {
    json chars = json::array();
    std::string text;
    for (const auto& c : w.irreducibles()) {
      chars.push_back({{"label", c.label}, {"values", c.values}});
      if (!text.empty()) text += '\n';
      text += c.label + ":";
      for (auto v : c.values) text += " " + std::to_string(v);
    }
    json sizes = json::array();
    for (const auto& c : w.classes()) sizes.push_back(c.size);
    j = {{"text", text}, {"characters", chars}, {"class_sizes", sizes}, {"order", w.order()}};
  } else {
    throw UsageError("--op", "'" + op + "' (expected kostka, multiplicity, flag or characters)");
  }
  j["type"] = w.type().name();
  print(out, o, j);
}

void print_report(std::ostream& out, const Options& o, const Report& report) {
  if (o.json()) {
    out << report.to_json().dump(2) << '\n';
    return;
  }
  for (const auto& c : report.checks)
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.lhs << " | " << c.rhs << '\n';
}

void cmd_cone(const Options& o, std::ostream& out, std::ostream&) {
  const auto type = type_flag(o.type);
  if (o.verify) {
    Report report;
    if (type.family == Family::A)
      report = parse_flag("--type", [&] { return verify_palindromicity(type.rank + 1); });
    else
      report = verify_springer_case(type);
    print_report(out, o, report);
    if (!report.passed()) throw VerificationFailed{};
    return;
  }
  json j;
  if (!o.chi.empty()) {
    check_character(weyl_group(type), o.chi);
    j = polynomial_json(h_multiplicity(type, o.chi));
    j["chi"] = weyl_group(type).character(o.chi).label;
  } else {
    j = polynomial_json(conjecture_poincare(type));
  }
  j["type"] = type.name();
  j["status"] = conjecture_status(type);
  print(out, o, j);
}

void cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const auto corpus = o.corpus.empty() ? acceptance_corpus()
                                       : parse_flag("--corpus", [&] {
                                           try {
                                             return load_corpus(o.corpus);
                                           } catch (const UnknownCorpus& e) {
                                             throw ParseError(e.what());
                                           }
                                         });
  std::vector<SuiteSpec> selected;
  for (auto& s : acceptance_suites(corpus))
    if (o.suite == "all" || o.suite == s.key) selected.push_back(std::move(s));
  if (selected.empty()) throw UsageError("verify", "unknown suite '" + o.suite + "'");

  bool ok = true;
  json results = json::array();
  for (const auto& s : selected) {
    const auto r = s.run();
    ok = ok && r.passed();
    if (o.json()) {
      results.push_back(r.to_json());
      continue;
    }
    out << r.summary_line() << '\n';
    constexpr std::size_t kShown = 10;
    for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) out << "  " << r.failures[i] << '\n';
    if (r.failures.size() > kShown) out << "  ... " << r.failures.size() - kShown << " more\n";
  }
  if (o.json()) out << json{{"passed", ok}, {"suites", results}}.dump(2) << '\n';
  if (!ok) throw VerificationFailed{};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poisson-de Rham Poincare polynomials of conical symplectic singularities", "poisson_poincare"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_matrix = [&o](CLI::App* sub) {
    sub->add_option("--matrix", o.matrix, "Integer matrix as JSON, e.g. [[1,0,1],[0,1,1]]")->required();
  };

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of the column matroid");
  add_matrix(tutte);
  add_format(tutte);

  auto* denham = app.add_subcommand("denham", "Denham's Laplacian polynomial Phi(x, y, b)");
  add_matrix(denham);
  add_format(denham);

  auto* hyper = app.add_subcommand("hypertoric", "Poincare polynomial of the hypertoric cone");
  add_matrix(hyper);
  hyper->add_option("--op", o.op, "poincare (default), via-phi, q-ih, p-zero or verify");
  add_format(hyper);

  auto* kost = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{lambda,mu}(t)");
  kost->add_option("--lambda", o.lambda, "Partition, e.g. 3,1 or 1^4")->required();
  kost->add_option("--mu", o.mu, "Partition")->required();
  kost->add_flag("--oracle", o.oracle, "Use the Hall-Littlewood expansion instead of charge");
  add_format(kost);

  auto* s3 = app.add_subcommand("s3", "S3-variety (slice between nilpotent orbits of gl_r)");
  s3->add_option("--lambda", o.lambda, "Larger partition")->required();
  s3->add_option("--mu", o.mu, "Smaller partition")->required();
  s3->add_flag("--at-x0", o.at_x0, "Only the x = 0 specialization");
  s3->add_flag("--ih", o.ih, "Only the intersection cohomology polynomial");
  add_format(s3);

  auto* cox = app.add_subcommand("coxeter", "Weyl group characters and coinvariant multiplicities");
  cox->add_option("--type", o.type, "A1..A5, B2, C2 or G2")->required();
  cox->add_option("--op", o.op, "kostka (default), multiplicity, flag or characters");
  cox->add_option("--chi", o.chi, "Character label");
  add_format(cox);

  auto* cone = app.add_subcommand("cone", "Nilpotent cone Poincare polynomial");
  cone->add_option("--type", o.type, "A1..A5, B2, C2 or G2")->required();
  cone->add_option("--chi", o.chi, "Springer character: print its multiplicity h(chi; y)");
  cone->add_flag("--verify", o.verify, "Check the tables and identities for this type");
  add_format(cone);

  auto* ver = app.add_subcommand("verify", "Run acceptance suites");
  std::vector<std::string> suite_names{"all"};
  for (const auto& s : acceptance_suites({})) suite_names.push_back(s.key);
  ver->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names));
  ver->add_option("--corpus", o.corpus,
                  "Matroid corpus: acceptance, graphic:K<n>, graphic:cycle_<n> or file:<path>; '*' suffix for duals");
  add_format(ver);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "tutte") cmd_tutte(o, out, err);
    else if (name == "denham") cmd_denham(o, out, err);
    else if (name == "hypertoric") cmd_hypertoric(o, out, err);
    else if (name == "kostka") cmd_kostka(o, out, err);
    else if (name == "s3") cmd_s3(o, out, err);
    else if (name == "coxeter") cmd_coxeter(o, out, err);
    else if (name == "cone") cmd_cone(o, out, err);
    else cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const VerificationFailed&) {
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace poisson::cli
