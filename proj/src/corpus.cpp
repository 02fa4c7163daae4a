#include "poisson/corpus.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "poisson/errors.hpp"

namespace poisson {

namespace {

Matroid incidence(int vertices, const std::vector<std::pair<int, int>>& edges) {
  IntegerMatrix m = IntegerMatrix::Zero(vertices, static_cast<Index>(edges.size()));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    m(edges[k].first, static_cast<Index>(k)) += 1;
    m(edges[k].second, static_cast<Index>(k)) -= 1;
  }
  return Matroid::from_matrix(m);
}

Matroid from_json(const nlohmann::json& j) {
  const auto& rows = j.is_object() ? j.at("matrix") : j;
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<long long>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("matrix entries must be integers");
      r.push_back(v.get<long long>());
    }
    out.push_back(std::move(r));
  }
  return Matroid::from_rows(out);
}

Matroid from_csv(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    for (char& c : line)
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    std::istringstream fields(line);
    std::vector<long long> row;
    std::string field;
    while (fields >> field) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(field, &used));
        if (used != field.size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad CSV entry '" + field + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return Matroid::from_rows(rows);
}

}  // namespace

Matroid complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return incidence(n, edges);
}

Matroid cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return incidence(n, edges);
}

Matroid parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix is not valid JSON: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix: ") + e.what());
  }
}

Matroid read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownCorpus("cannot read matrix file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) return parse_matrix(text);
  return from_csv(text);
}

std::vector<CorpusEntry> load_corpus(const std::string& name) {
  if (name == "acceptance") {
    std::vector<CorpusEntry> out;
    for (const char* base : {"graphic:K4", "graphic:K5", "graphic:cycle_3", "graphic:cycle_4",
                             "graphic:cycle_5", "graphic:cycle_6"}) {
      auto m = load_corpus(base).front().matroid;
      out.push_back({base, m});
      out.push_back({std::string(base) + "*", m.dual()});
    }
    return out;
  }
  if (!name.empty() && name.back() == '*') {
    auto entries = load_corpus(name.substr(0, name.size() - 1));
    for (auto& e : entries) e = {e.name + "*", e.matroid.dual()};
    return entries;
  }
  static const std::regex complete(R"(graphic:K(\d+))"), cycle(R"(graphic:cycle_(\d+))");
  std::smatch match;
  if (std::regex_match(name, match, complete)) {
    const int n = std::stoi(match[1]);
    if (n < 1 || n > 6) throw UnknownCorpus("graphic:Kn is available for 1 <= n <= 6");
    return {{name, complete_graph(n)}};
  }
  if (std::regex_match(name, match, cycle)) {
    const int n = std::stoi(match[1]);
    if (n < 2 || n > static_cast<int>(kMaxGroundSet)) throw UnknownCorpus("graphic:cycle_n is available for 2 <= n <= 64");
    return {{name, cycle_graph(n)}};
  }
  if (name.rfind("file:", 0) == 0) return {{name, read_matrix_file(name.substr(5))}};
  throw UnknownCorpus("unknown corpus '" + name + "'");
}

}  // namespace poisson
