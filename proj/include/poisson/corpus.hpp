#pragma once

#include <string>
#include <vector>

#include "poisson/matroid.hpp"

namespace poisson {

struct CorpusEntry {
  std::string name;
  Matroid matroid;
};

/// Vertex-edge incidence matrix of K_n (columns e_i - e_j, i < j).
Matroid complete_graph(int n);
/// Incidence matrix of the n-cycle.
Matroid cycle_graph(int n);

/// Integer matrix from JSON text: either [[...], ...] or {"matrix": [[...]]}.
/// Throws ParseError.
Matroid parse_matrix(const std::string& text);
/// Matrix from a file: JSON as above, otherwise CSV rows. Throws
/// UnknownCorpus if the file cannot be read.
Matroid read_matrix_file(const std::string& path);

/// "graphic:K<n>" (1 <= n <= 6), "graphic:cycle_<n>" (n >= 2),
/// "file:<path>", or "acceptance" (K4, K5, C3..C6 and their Gale duals).
/// A trailing "*" takes the Gale dual. Throws UnknownCorpus.
std::vector<CorpusEntry> load_corpus(const std::string& name);

}  // namespace poisson
