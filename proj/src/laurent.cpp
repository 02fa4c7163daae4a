#include "poisson/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "poisson/errors.hpp"

namespace poisson {

namespace {

using Exponents = LaurentPolynomial::Exponents;
using TermMap = LaurentPolynomial::TermMap;

TermMap remap(const TermMap& terms, const std::vector<std::string>& from,
              const std::vector<std::string>& to) {
  std::vector<std::size_t> pos(from.size());
  for (std::size_t i = 0; i < from.size(); ++i)
    pos[i] = static_cast<std::size_t>(std::find(to.begin(), to.end(), from[i]) - to.begin());
  TermMap out;
  for (const auto& [e, c] : terms) {
    Exponents ne(to.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (pos[i] >= to.size())
        throw InternalInconsistency("variable '" + from[i] + "' missing from target list");
      ne[pos[i]] = e[i];
    }
    out.emplace(std::move(ne), c);
  }
  return out;
}

Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  const unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  for (unsigned i = 0; i < n; ++i) r *= base;
  return e < 0 ? Rational(1) / r : r;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(int c) {
  if (c != 0) terms_.emplace(Exponents{}, Integer(c));
}

LaurentPolynomial::LaurentPolynomial(const Integer& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

LaurentPolynomial LaurentPolynomial::variable(const std::string& name) {
  return monomial({name}, {1});
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<std::string> vars, Exponents exps,
                                              Integer coef) {
  if (vars.size() != exps.size())
    throw ParseError("exponent vector length does not match variable list");
  LaurentPolynomial p;
  p.vars_ = std::move(vars);
  if (coef != 0) p.terms_.emplace(std::move(exps), std::move(coef));
  return p;
}

LaurentPolynomial LaurentPolynomial::univariate(const std::string& name,
                                                const std::vector<Integer>& coefs, int low) {
  LaurentPolynomial p;
  p.vars_ = {name};
  for (std::size_t i = 0; i < coefs.size(); ++i)
    if (coefs[i] != 0) p.terms_.emplace(Exponents{low + static_cast<int>(i)}, coefs[i]);
  return p;
}

std::optional<std::size_t> LaurentPolynomial::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

int LaurentPolynomial::max_degree(const std::string& name) const {
  auto i = index_of(name);
  if (!i || terms_.empty()) return 0;
  int d = terms_.begin()->first[*i];
  for (const auto& [e, c] : terms_) d = std::max(d, e[*i]);
  return d;
}

int LaurentPolynomial::min_degree(const std::string& name) const {
  auto i = index_of(name);
  if (!i || terms_.empty()) return 0;
  int d = terms_.begin()->first[*i];
  for (const auto& [e, c] : terms_) d = std::min(d, e[*i]);
  return d;
}

Integer LaurentPolynomial::coefficient(const std::map<std::string, int>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, k] : monomial) {
    auto i = index_of(name);
    if (!i) {
      if (k != 0) return 0;
      continue;
    }
    e[*i] = k;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPolynomial::constant_term() const { return coefficient({}); }

LaurentPolynomial LaurentPolynomial::with_variables(const std::vector<std::string>& vars) const {
  LaurentPolynomial p;
  p.vars_ = vars;
  p.terms_ = remap(terms_, vars_, vars);
  return p;
}

LaurentPolynomial LaurentPolynomial::trimmed() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool occurs = false;
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        occurs = true;
        break;
      }
    if (occurs) used.push_back(vars_[i]);
  }
  return with_variables(used);
}

void LaurentPolynomial::unify(LaurentPolynomial& other) {
  if (vars_ == other.vars_) return;
  std::vector<std::string> merged = vars_;
  for (const auto& v : other.vars_)
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  if (merged != vars_) {
    terms_ = remap(terms_, vars_, merged);
    vars_ = merged;
  }
  if (merged != other.vars_) {
    other.terms_ = remap(other.terms_, other.vars_, merged);
    other.vars_ = merged;
  }
}

void LaurentPolynomial::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  LaurentPolynomial r = rhs;
  unify(r);
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  return *this += -rhs;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial l = a, r = b;
  l.unify(r);
  LaurentPolynomial out;
  out.vars_ = l.vars_;
  const std::size_t n = l.vars_.size();
  Exponents e(n);
  for (const auto& [ea, ca] : l.terms_)
    for (const auto& [eb, cb] : r.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  return *this = *this * rhs;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.size() != b.size()) return false;
  LaurentPolynomial l = a, r = b;
  l.unify(r);
  return l.terms_ == r.terms_;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = 1, base = *this;
  result.vars_ = vars_;
  if (!result.terms_.empty()) result.terms_ = remap(result.terms_, {}, vars_);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::substitute(const std::string& var,
                                                const LaurentPolynomial& q) const {
  const auto idx = index_of(var);
  if (!idx) return *this;

  // Group terms by their exponent of `var`; the remaining monomial keeps
  // exponent zero there.
  std::map<int, LaurentPolynomial> groups;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[*idx] = 0;
    auto& g = groups[e[*idx]];
    if (g.vars_.empty()) g.vars_ = vars_;
    g.add_term(rest, c);
  }

  const bool invertible =
      q.size() == 1 && (q.terms_.begin()->second == 1 || q.terms_.begin()->second == -1);
  std::optional<LaurentPolynomial> q_inverse;
  if (invertible) {
    const auto& [qe, qc] = *q.terms_.begin();
    Exponents neg(qe.size());
    for (std::size_t i = 0; i < qe.size(); ++i) neg[i] = -qe[i];
    q_inverse = monomial(q.vars_, neg, qc);
  }

  LaurentPolynomial result;
  result.vars_ = vars_;
  for (const auto& [k, group] : groups) {
    LaurentPolynomial factor;
    if (k >= 0) {
      factor = q.pow(static_cast<unsigned>(k));
    } else {
      if (!q_inverse)
        throw NegativeExponentComposition("cannot substitute a non-monomial for '" + var +
                                          "' occurring with exponent " + std::to_string(k));
      factor = q_inverse->pow(static_cast<unsigned>(-k));
    }
    result += group * factor;
  }
  return result;
}

Rational LaurentPolynomial::evaluate(const std::map<std::string, Rational>& point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = Rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end()) throw MissingVariable("no value for variable '" + vars_[i] + "'");
      if (it->second == 0 && e[i] < 0)
        throw DivisionByZero("variable '" + vars_[i] + "' is zero but occurs with exponent " +
                             std::to_string(e[i]));
      term *= rational_pow(it->second, e[i]);
    }
    total += term;
  }
  return total;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mono.empty())
      os << mag;
    else if (mag == 1)
      os << mono;
    else
      os << mag << '*' << mono;
  }
  return os.str();
}

nlohmann::json LaurentPolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) terms.push_back({{"exp", e}, {"coef", c.str()}});
  return {{"vars", vars_}, {"terms", terms}};
}

LaurentPolynomial LaurentPolynomial::from_json(const nlohmann::json& j) {
  try {
    LaurentPolynomial p;
    p.vars_ = j.at("vars").get<std::vector<std::string>>();
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exp").get<Exponents>();
      if (e.size() != p.vars_.size())
        throw ParseError("term exponent length does not match \"vars\"");
      const auto& coef = t.at("coef");
      Integer c = coef.is_string() ? Integer(coef.get<std::string>())
                                   : Integer(coef.get<long long>());
      p.add_term(e, c);
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
  } catch (const std::runtime_error& ex) {
    if (dynamic_cast<const Error*>(&ex)) throw;
    throw ParseError(std::string("malformed coefficient: ") + ex.what());
  }
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
  return os << p.to_string();
}

namespace {

// Dense coefficients (ascending) and lowest exponent of a univariate
// polynomial in `var`.
std::pair<std::vector<Integer>, int> dense(const LaurentPolynomial& p, const std::string& var) {
  const auto idx = p.index_of(var);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && (!idx || i != *idx))
        throw InternalInconsistency("expected a univariate polynomial in '" + var + "'");
  if (p.is_zero()) return {{}, 0};
  const int lo = p.min_degree(var), hi = p.max_degree(var);
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>((idx ? e[*idx] : 0) - lo)] = c;
  return {out, lo};
}

}  // namespace

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& num,
                                              const LaurentPolynomial& den,
                                              const std::string& var) {
  if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (num.is_zero()) return LaurentPolynomial::univariate(var, {});
  auto [n, nlo] = dense(num, var);
  auto [d, dlo] = dense(den, var);
  if (n.size() < d.size()) return std::nullopt;
  std::vector<Integer> q(n.size() - d.size() + 1);
  const Integer& lead = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = n[k + d.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    q[k] = top / lead;
    for (std::size_t j = 0; j < d.size(); ++j) n[k + j] -= q[k] * d[j];
  }
  for (const auto& c : n)
    if (c != 0) return std::nullopt;
  return LaurentPolynomial::univariate(var, q, nlo - dlo);
}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  return *this;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw DivisionByZero("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::optional<LaurentPolynomial> RationalFunction::to_polynomial(const std::string& var) const {
  return divide_exact(num_, den_, var);
}

}  // namespace poisson
