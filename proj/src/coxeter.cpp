#include "poisson/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "poisson/errors.hpp"

namespace poisson {

CartanType CartanType::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "B2" || s == "C2") return {Family::B, 2};
  if (s == "G2") return {Family::G, 2};
  if (s.size() >= 2 && s[0] == 'A' && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
    const int n = std::stoi(s.substr(1));
    if (n >= 1 && n <= 5) return {Family::A, n};
  }
  throw UnsupportedType("unsupported Cartan type '" + text + "' (expected A1..A5, B2 or G2)");
}

std::string CartanType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B2";
    case Family::G: return "G2";
  }
  return "?";
}

int WeylGroup::reflection_count() const {
  int n = 0;
  for (int d : degrees_) n += d - 1;
  return n;
}

namespace {

using Key = std::vector<std::int64_t>;

Key key_of(const SmallMatrix& m) { return Key(m.data(), m.data() + m.size()); }

// Gram matrix of the simple roots.
SmallMatrix gram(const CartanType& t) {
  SmallMatrix g = SmallMatrix::Zero(t.rank, t.rank);
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < t.rank; ++i) {
        g(i, i) = 2;
        if (i + 1 < t.rank) g(i, i + 1) = g(i + 1, i) = -1;
      }
      break;
    case Family::B:  // alpha_1 long, alpha_2 short
      g << 2, -1, -1, 1;
      break;
    case Family::G:  // alpha_1 short, alpha_2 long
      g << 2, -3, -3, 6;
      break;
  }
  return g;
}

// s_i(alpha_j) = alpha_j - <alpha_i^vee, alpha_j> alpha_i
std::vector<SmallMatrix> simple_reflections(const CartanType& t) {
  const SmallMatrix g = gram(t);
  std::vector<SmallMatrix> out;
  for (int i = 0; i < t.rank; ++i) {
    SmallMatrix s = SmallMatrix::Identity(t.rank, t.rank);
    for (int j = 0; j < t.rank; ++j) s(i, j) -= 2 * g(i, j) / g(i, i);
    out.push_back(s);
  }
  return out;
}

std::vector<int> degrees_of(const CartanType& t) {
  switch (t.family) {
    case Family::A: {
      std::vector<int> d(static_cast<std::size_t>(t.rank));
      std::iota(d.begin(), d.end(), 2);
      return d;
    }
    case Family::B: return {2, 4};
    case Family::G: return {2, 6};
  }
  return {};
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

std::string canonical_dihedral_label(const std::string& label) {
  static const std::map<std::string, std::string> aliases{
      {"triv", "triv"},           {"trivial", "triv"},      {"sigma", "sigma"},
      {"sign", "sigma"},          {"σ", "sigma"},           {"tau", "tau"},
      {"τ", "tau"},               {"tau_sigma", "tau_sigma"}, {"tau*sigma", "tau_sigma"},
      {"τ⊗σ", "tau_sigma"},       {"tau⊗sigma", "tau_sigma"}, {"h", "h"},
      {"h_tau", "h_tau"},         {"h*tau", "h_tau"},       {"h⊗τ", "h_tau"},
      {"h⊗tau", "h_tau"}};
  auto it = aliases.find(label);
  return it == aliases.end() ? label : it->second;
}

}  // namespace

long long murnaghan_nakayama(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw SizeMismatch("Murnaghan-Nakayama: sizes differ");
  if (rho.length() == 0) return 1;
  const int k = rho[0];
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + len - 1 - i;
  const std::set<int> betas(beta.begin(), beta.end());

  long long total = 0;
  for (int b : beta) {
    const int moved = b - k;
    if (moved < 0 || betas.count(moved)) continue;
    int between = 0;
    for (int c : beta)
      if (c > moved && c < b) ++between;
    std::vector<int> next;
    for (int c : beta) next.push_back(c == b ? moved : c);
    std::sort(next.rbegin(), next.rend());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
      const int p = next[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (p > 0) parts.push_back(p);
    }
    total += (between % 2 ? -1 : 1) * murnaghan_nakayama(Partition(parts), rest);
  }
  return total;
}

WeylGroup WeylGroup::build(const CartanType& type) {
  const auto checked = CartanType::parse(type.name());
  WeylGroup w;
  w.type_ = checked;
  w.generators_ = simple_reflections(checked);
  w.degrees_ = degrees_of(checked);
  const int r = checked.rank;
  const bool type_a = checked.family == Family::A;

  // Breadth-first closure. Alongside each matrix keep its permutation
  // (type A: s_i swaps i and i+1) or the value of tau, the linear character
  // with tau(s_1) = +1 and tau(s_2) = -1 (dihedral: s_1 is the long root
  // reflection in B2 and the short one in G2).
  std::map<Key, std::size_t> index;
  std::vector<std::vector<int>> perms;
  std::vector<int> tau;
  std::deque<std::size_t> queue;
  w.elements_.push_back(SmallMatrix::Identity(r, r));
  index[key_of(w.elements_[0])] = 0;
  std::vector<int> id(static_cast<std::size_t>(r + 1));
  std::iota(id.begin(), id.end(), 0);
  perms.push_back(id);
  tau.push_back(1);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t g = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      SmallMatrix prod = w.elements_[g] * w.generators_[static_cast<std::size_t>(i)];
      auto [it, inserted] = index.emplace(key_of(prod), w.elements_.size());
      if (!inserted) continue;
      w.elements_.push_back(std::move(prod));
      std::vector<int> p = perms[g];
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
      perms.push_back(std::move(p));
      tau.push_back(tau[g] * (i == 1 ? -1 : 1));
      queue.push_back(it->second);
    }
  }
  std::size_t expected = 1;
  for (int d : w.degrees_) expected *= static_cast<std::size_t>(d);
  if (w.elements_.size() != expected)
    throw InternalInconsistency(checked.name() + ": closure has " + std::to_string(w.elements_.size()) +
                                " elements, expected " + std::to_string(expected));

  // Conjugacy classes, in order of first appearance.
  const std::size_t n = w.elements_.size();
  std::vector<SmallMatrix> inverses(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if ((w.elements_[g] * w.elements_[h]).isIdentity()) {
        inverses[g] = w.elements_[h];
        break;
      }
  w.class_of_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    if (w.class_of_[g] != n) continue;
    const std::size_t c = w.classes_.size();
    ConjugacyClass cls;
    cls.representative = g;
    if (type_a) cls.cycle_type = cycle_type(perms[g]);
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t k = index.at(key_of(w.elements_[h] * w.elements_[g] * inverses[h]));
      if (w.class_of_[k] == n) {
        w.class_of_[k] = c;
        ++cls.size;
      }
    }
    w.classes_.push_back(std::move(cls));
  }

  // Character table.
  const auto class_values = [&](auto f) {
    std::vector<long long> v;
    for (const auto& cls : w.classes_) v.push_back(f(cls));
    return v;
  };
  if (type_a) {
    for (const auto& nu : all_partitions(r + 1))
      w.irreducibles_.push_back({nu.to_string(), class_values([&](const ConjugacyClass& cls) {
                                   return murnaghan_nakayama(nu, cls.cycle_type);
                                 })});
  } else {
    const auto triv = class_values([](const ConjugacyClass&) { return 1LL; });
    const auto sigma = class_values([&](const ConjugacyClass& cls) {
      return static_cast<long long>(determinant(w.elements_[cls.representative]));
    });
    const auto t = class_values([&](const ConjugacyClass& cls) { return static_cast<long long>(tau[cls.representative]); });
    const auto h = class_values([&](const ConjugacyClass& cls) {
      return static_cast<long long>(w.elements_[cls.representative].trace());
    });
    w.irreducibles_ = {{"triv", triv}, {"sigma", sigma}, {"tau", t}, {"tau_sigma", w.tensor(t, sigma)}, {"h", h}};
    if (checked.family == Family::G) w.irreducibles_.push_back({"h_tau", w.tensor(h, t)});
  }
  return w;
}

const Character& WeylGroup::character(const std::string& label) const {
  std::string wanted;
  if (type_.family == Family::A) {
    const std::string c = canonical_dihedral_label(label);
    if (c == "triv")
      wanted = Partition::row(rank() + 1).to_string();
    else if (c == "sigma")
      wanted = Partition::column(rank() + 1).to_string();
    else {
      try {
        wanted = Partition::parse(label).to_string();
      } catch (const ParseError&) {
        throw UnknownCharacter("unknown character '" + label + "' for " + type_.name());
      }
    }
  } else {
    wanted = canonical_dihedral_label(label);
  }
  for (const auto& chi : irreducibles_)
    if (chi.label == wanted) return chi;
  throw UnknownCharacter("unknown character '" + label + "' for " + type_.name());
}

std::vector<long long> WeylGroup::tensor(const std::vector<long long>& a,
                                         const std::vector<long long>& b) const {
  if (a.size() != classes_.size() || b.size() != classes_.size())
    throw SizeMismatch("class functions must have one value per class");
  std::vector<long long> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Rational WeylGroup::inner_product(const std::vector<long long>& a,
                                  const std::vector<long long>& b) const {
  Integer sum = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    sum += Integer(static_cast<long long>(classes_[i].size)) * a[i] * b[i];
  return Rational(sum, Integer(static_cast<unsigned long long>(order())));
}

LaurentPolynomial det_one_minus_q(const SmallMatrix& g) {
  const auto q = LaurentPolynomial::variable("q");
  const Index n = g.rows();
  std::vector<std::vector<LaurentPolynomial>> m(static_cast<std::size_t>(n),
                                                std::vector<LaurentPolynomial>(static_cast<std::size_t>(n)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          LaurentPolynomial(i == j ? 1 : 0) - Integer(g(i, j)) * q;

  // Laplace expansion along the first remaining row.
  std::function<LaurentPolynomial(std::size_t, std::vector<std::size_t>&)> expand =
      [&](std::size_t row, std::vector<std::size_t>& cols) -> LaurentPolynomial {
    if (cols.empty()) return 1;
    LaurentPolynomial total = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& entry = m[row][cols[k]];
      if (entry.is_zero()) continue;
      std::vector<std::size_t> minor = cols;
      minor.erase(minor.begin() + static_cast<std::ptrdiff_t>(k));
      const auto sub = entry * expand(row + 1, minor);
      if (k % 2) total -= sub;
      else total += sub;
    }
    return total;
  };
  std::vector<std::size_t> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 0);
  return (expand(0, cols) * LaurentPolynomial::monomial({"q"}, {0})).with_variables({"q"});
}

LaurentPolynomial coinvariant_multiplicity(const WeylGroup& w, const std::vector<long long>& f) {
  if (f.size() != w.classes().size()) throw SizeMismatch("class function has the wrong length");
  const auto q = LaurentPolynomial::variable("q");
  // Classes sharing a characteristic polynomial share a denominator.
  std::map<std::string, std::pair<LaurentPolynomial, LaurentPolynomial>> grouped;
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c] == 0) continue;
    const auto den = det_one_minus_q(w.elements()[w.classes()[c].representative]);
    auto& slot = grouped.try_emplace(den.to_string(), LaurentPolynomial(0), den).first->second;
    slot.first += Integer(static_cast<long long>(w.classes()[c].size)) * Integer(f[c]);
  }
  RationalFunction sum(LaurentPolynomial::monomial({"q"}, {0}, 0));
  for (const auto& [name, term] : grouped) sum += RationalFunction(term.first, term.second);

  LaurentPolynomial invariants = 1;
  for (int d : w.degrees()) invariants *= 1 - q.pow(static_cast<unsigned>(d));
  sum *= RationalFunction(invariants, Integer(static_cast<unsigned long long>(w.order())));
  auto p = sum.to_polynomial("q");
  if (!p) throw NonPolynomialResult("Molien sum for " + w.type().name() + " did not reduce to a polynomial");
  return p->with_variables({"q"});
}

LaurentPolynomial coinvariant_multiplicity(const WeylGroup& w, const std::string& chi) {
  return coinvariant_multiplicity(w, w.character(chi).values);
}

LaurentPolynomial generalized_kostka(const WeylGroup& w, const std::string& chi) {
  const auto twisted = w.tensor(w.character(chi).values, w.sign().values);
  return coinvariant_multiplicity(w, twisted).substitute("q", LaurentPolynomial::variable("t")).with_variables({"t"});
}

LaurentPolynomial flag_poincare(const WeylGroup& w) {
  const auto t = LaurentPolynomial::variable("t");
  LaurentPolynomial p = 1;
  for (int d : w.degrees()) {
    LaurentPolynomial s = 0;
    for (int k = 0; k < d; ++k) s += t.pow(static_cast<unsigned>(k));
    p *= s;
  }
  return (p * LaurentPolynomial::monomial({"t"}, {0})).with_variables({"t"});
}

const WeylGroup& weyl_group(const CartanType& type) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<WeylGroup>> cache;
  const auto checked = CartanType::parse(type.name());
  std::lock_guard lock(mutex);
  auto& slot = cache[checked.name()];
  if (!slot) slot = std::make_unique<WeylGroup>(WeylGroup::build(checked));
  return *slot;
}

}  // namespace poisson
