#pragma once

#include <optional>

#include "chromakernel/digraph.hpp"

namespace ck::certify {

// Reference routines that share no code with the state search or the
// backtracking solver. Exponential; meant for re-checking results on small
// digraphs.

inline constexpr int kMaxVertices = 20;

// Closure by enumerating every simple path from every vertex.
Digraph closure_by_simple_paths(const ColoredDigraph& d, int k);

// Lexicographically smallest kernel found by trying every nonempty subset.
std::optional<VertexList> kernel_by_subsets(const Digraph& g);

struct OracleVerdict {
  bool kernel_exists = false;
  std::optional<VertexList> kernel;
};

OracleVerdict k_colored_kernel_oracle(const ColoredDigraph& d, int k);

}  // namespace ck::certify
