#include "poisson/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "poisson/errors.hpp"

namespace poisson {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ParseError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    int value = 0, repeat = 1;
    try {
      std::size_t used = 0;
      const auto caret = item.find('^');
      value = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) throw ParseError("");
      if (caret != std::string::npos) {
        repeat = std::stoi(item.substr(caret + 1), &used);
        if (used != item.size() - caret - 1 || repeat < 0) throw ParseError("");
      }
    } catch (const std::exception&) {
      throw ParseError("cannot parse partition part '" + item + "'");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
  }
  return Partition(std::move(parts));
}

Partition Partition::column(int r) { return Partition(std::vector<int>(static_cast<std::size_t>(r), 1)); }

Partition Partition::row(int r) { return r == 0 ? Partition() : Partition({r}); }

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

int Partition::n_stat() const {
  int n = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) n += static_cast<int>(i) * parts_[i];
  return n;
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw SizeMismatch("partitions " + mu.to_string() + " and " + lambda.to_string() +
                       " have different sizes");
  int a = 0, b = 0;
  for (int i = 0; i < std::max(mu.length(), lambda.length()); ++i) {
    a += mu[i];
    b += lambda[i];
    if (a > b) return false;
  }
  return true;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> interval(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw SizeMismatch("interval endpoints have different sizes");
  if (lambda.size() > 12) throw ScaleExceeded("interval enumeration is limited to size 12");
  std::vector<Partition> out;
  for (auto& nu : all_partitions(lambda.size()))
    if (dominance_leq(mu, nu) && dominance_leq(nu, lambda)) out.push_back(std::move(nu));
  return out;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (auto row = rows.rbegin(); row != rows.rend(); ++row) word.insert(word.end(), row->begin(), row->end());
  return word;
}

bool Tableau::is_semistandard() const {
  if (static_cast<int>(rows.size()) != shape.length()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape[static_cast<int>(i)]) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::content() const {
  std::vector<int> c;
  for (const auto& row : rows)
    for (int v : row) {
      if (static_cast<int>(c.size()) < v) c.resize(static_cast<std::size_t>(v), 0);
      ++c[static_cast<std::size_t>(v - 1)];
    }
  return c;
}

std::vector<Tableau> ssyt(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("shape " + lambda.to_string() + " and content " + mu.to_string() +
                       " have different sizes");
  std::vector<Tableau> out;
  const int rows = lambda.length();
  std::vector<std::vector<int>> filling(static_cast<std::size_t>(rows));

  // Adds `left` copies of `letter` as a horizontal strip, choosing row
  // lengths from the top row down.
  std::function<void(int, int, int, const std::vector<int>&)> strip;
  std::function<void(int)> place = [&](int letter) {
    if (letter > mu.length()) {
      out.push_back({lambda, filling});
      return;
    }
    std::vector<int> before(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) before[static_cast<std::size_t>(i)] = static_cast<int>(filling[static_cast<std::size_t>(i)].size());
    strip(letter, 0, mu[letter - 1], before);
  };
  strip = [&](int letter, int row, int left, const std::vector<int>& before) {
    if (left == 0) {
      place(letter + 1);
      return;
    }
    if (row >= rows) return;
    const auto r = static_cast<std::size_t>(row);
    const int cap = std::min(lambda[row], row == 0 ? lambda[0] : before[r - 1]);
    const int room = cap - before[r];
    for (int k = std::min(room, left); k >= 0; --k) {
      filling[r].insert(filling[r].end(), static_cast<std::size_t>(k), letter);
      strip(letter, row + 1, left - k, before);
      filling[r].resize(static_cast<std::size_t>(before[r]));
    }
  };
  place(1);
  return out;
}

int charge(const std::vector<int>& word) {
  const int letters = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
  std::vector<bool> used(word.size(), false);
  std::size_t remaining = word.size();
  int total = 0;
  while (remaining > 0) {
    int index = 0;
    std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(word.size());
    for (int letter = 1; letter <= letters; ++letter) {
      // nearest unused occurrence to the left of pos, else wrap around
      std::ptrdiff_t found = -1;
      for (std::ptrdiff_t i = pos - 1; i >= 0; --i)
        if (!used[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == letter) {
          found = i;
          break;
        }
      if (found < 0) {
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(word.size()) - 1; i >= pos; --i)
          if (!used[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == letter) {
            found = i;
            break;
          }
        if (found < 0) break;  // the remaining subword uses letters 1..letter-1
        if (letter > 1) ++index;
      }
      used[static_cast<std::size_t>(found)] = true;
      --remaining;
      total += index;
      pos = found;
    }
  }
  return total;
}

int charge(const Tableau& t) { return charge(t.reading_word()); }

LaurentPolynomial kostka(const Partition& lambda, const Partition& mu) {
  std::vector<Integer> coefs;
  for (const auto& t : ssyt(lambda, mu)) {
    const auto c = static_cast<std::size_t>(charge(t));
    if (coefs.size() <= c) coefs.resize(c + 1, 0);
    coefs[c] += 1;
  }
  return LaurentPolynomial::univariate("t", coefs);
}

}  // namespace poisson
