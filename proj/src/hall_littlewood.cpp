#include "poisson/hall_littlewood.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "poisson/errors.hpp"
#include "poisson/parallel.hpp"

namespace poisson {

namespace {

using Exponent = std::vector<int>;
// Polynomial in t with machine coefficients, dense by degree. The product
// has n(n-1)/2 linear factors, so the degree stays below kMaxDegree.
constexpr std::size_t kMaxDegree = kHallLittlewoodLimit * (kHallLittlewoodLimit - 1) / 2 + 1;
using TPoly = std::array<long long, kMaxDegree>;

void add_into(TPoly& a, const TPoly& b, int shift, long long sign) {
  for (std::size_t i = 0; i + static_cast<std::size_t>(shift) < kMaxDegree; ++i)
    a[i + static_cast<std::size_t>(shift)] += sign * b[i];
}

LaurentPolynomial to_laurent(const TPoly& p) {
  std::vector<Integer> coefs(p.begin(), p.end());
  return LaurentPolynomial::univariate("t", coefs);
}

// v_m(t) = prod_{j=1}^m (1 - t^j) / (1 - t) = prod_{j=1}^m (1 + t + ... + t^{j-1})
LaurentPolynomial v_factor(int m) {
  const auto t = LaurentPolynomial::variable("t");
  LaurentPolynomial v = 1;
  for (int j = 1; j <= m; ++j) {
    LaurentPolynomial s = 0;
    for (int k = 0; k < j; ++k) s += t.pow(static_cast<unsigned>(k));
    v *= s;
  }
  return v;
}

// Schur expansion of P_mu in n = |mu| variables:
//   P_mu = v_mu(t)^-1 A(x^mu prod_{i<j} (x_i - t x_j)) / A(x^delta),
// where A antisymmetrizes. Each monomial x^beta with distinct exponents
// contributes sign(sort) to s_{sort(beta) - delta}.
std::map<Partition, LaurentPolynomial> schur_expansion(const Partition& mu) {
  const int n = mu.size();
  // Exponent vectors packed 8 bits per variable; entries stay below
  // mu_1 + n <= 16 for n <= kHallLittlewoodLimit.
  const auto bit = [](int i) { return std::uint64_t{1} << (8 * i); };
  const auto exponent = [](std::uint64_t key, int i) { return static_cast<int>((key >> (8 * i)) & 0xff); };
  std::uint64_t start = 0;
  for (int i = 0; i < mu.length(); ++i) start += static_cast<std::uint64_t>(mu[i]) * bit(i);

  std::unordered_map<std::uint64_t, TPoly> f{{start, TPoly{1}}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::unordered_map<std::uint64_t, TPoly> next;
      next.reserve(f.size() * 2);
      for (const auto& [e, c] : f) {
        add_into(next[e + bit(i)], c, 0, 1);
        add_into(next[e + bit(j)], c, 1, -1);
      }
      f = std::move(next);
    }

  std::map<Partition, TPoly> coeffs;
  for (const auto& [key, c] : f) {
    Exponent e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = exponent(key, i);
    Exponent sorted = e;
    // sign of the sorting permutation by counting inversions
    int inversions = 0;
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (e[static_cast<std::size_t>(i)] == e[static_cast<std::size_t>(j)]) {
          distinct = false;
          break;
        }
        if (e[static_cast<std::size_t>(i)] < e[static_cast<std::size_t>(j)]) ++inversions;
      }
    if (!distinct) continue;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
      const int p = sorted[static_cast<std::size_t>(i)] - (n - 1 - i);
      if (p > 0) parts.push_back(p);
    }
    add_into(coeffs[Partition(parts)], c, 0, inversions % 2 ? -1 : 1);
  }

  LaurentPolynomial v = v_factor(n - mu.length());
  for (int k = 1; k <= n; ++k) v *= v_factor(mu.multiplicity(k));

  std::map<Partition, LaurentPolynomial> out;
  for (const auto& [nu, c] : coeffs) {
    const auto num = to_laurent(c);
    if (num.is_zero()) continue;
    auto q = divide_exact(num, v, "t");
    if (!q) throw InternalInconsistency("Hall-Littlewood coefficient not divisible by v_mu");
    out.emplace(nu, q->with_variables({"t"}));
  }
  return out;
}

struct KostkaTable {
  std::vector<Partition> order;  // reverse lexicographic, so dominance is upper triangular
  std::map<Partition, std::map<Partition, LaurentPolynomial>> hl;     // P_mu -> s_nu
  std::map<Partition, std::map<Partition, LaurentPolynomial>> kostka;  // s_lambda -> P_mu
};

std::shared_ptr<const KostkaTable> build_table(int n) {
  auto table = std::make_shared<KostkaTable>();
  table->order = all_partitions(n);
  const auto expansions = parallel_map(table->order, schur_expansion);
  for (std::size_t i = 0; i < expansions.size(); ++i) table->hl[table->order[i]] = expansions[i];

  const auto& order = table->order;
  const auto entry = [&](const Partition& row, const Partition& col) -> LaurentPolynomial {
    const auto& r = table->hl.at(row);
    auto it = r.find(col);
    return it == r.end() ? LaurentPolynomial(0) : it->second;
  };
  // Upper unitriangular M (rows P_mu, columns s_nu); N = M^-1 from U N = I,
  // filling rows bottom-up.
  const std::size_t m = order.size();
  std::vector<std::vector<LaurentPolynomial>> inv(m, std::vector<LaurentPolynomial>(m, 0));
  for (std::size_t i = m; i-- > 0;) {
    inv[i][i] = 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      LaurentPolynomial s = 0;
      for (std::size_t k = i + 1; k <= j; ++k) {
        const auto u = entry(order[i], order[k]);
        if (!u.is_zero() && !inv[k][j].is_zero()) s += u * inv[k][j];
      }
      inv[i][j] = -s;
    }
  }
  // s = N P, so K_{lambda mu} = N_{lambda mu}.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto k = inv[i][j];
      if (!k.is_zero()) table->kostka[order[i]][order[j]] = k.with_variables({"t"});
    }
  return table;
}

std::shared_ptr<const KostkaTable> table_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const KostkaTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_table(n);
  return slot;
}

void check_scale(int n) {
  if (n > kHallLittlewoodLimit)
    throw ScaleExceeded("the Hall-Littlewood oracle is limited to size " +
                        std::to_string(kHallLittlewoodLimit));
}

}  // namespace

LaurentPolynomial hall_littlewood_schur_coefficient(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw SizeMismatch("partitions have different sizes");
  check_scale(mu.size());
  const auto table = table_for(mu.size());
  const auto& row = table->hl.at(mu);
  auto it = row.find(nu);
  return it == row.end() ? LaurentPolynomial::monomial({"t"}, {0}, 0) : it->second;
}

LaurentPolynomial kostka_oracle_hl(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("shape " + lambda.to_string() + " and weight " + mu.to_string() +
                       " have different sizes");
  check_scale(lambda.size());
  const auto table = table_for(lambda.size());
  const auto& row = table->kostka.at(lambda);
  auto it = row.find(mu);
  return it == row.end() ? LaurentPolynomial::monomial({"t"}, {0}, 0) : it->second;
}

}  // namespace poisson
