#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "chromakernel/color_set.hpp"
#include "chromakernel/digraph.hpp"

namespace ck {

struct PathWitness {
  VertexList vertices;  // v0 .. vt, pairwise distinct, t >= 1
  ColorSet colors_used;
};

struct ColoredPath {
  int colors = 0;  // |witness.colors_used|
  PathWitness witness;
};

// Fewest colors over all directed u -> v paths, if that number is at most
// k_max, with one witness path. Witness ties break by BFS order over
// ascending vertex ids.
std::optional<ColoredPath> min_colors_path(const ColoredDigraph& d, Vertex u, Vertex v, int k_max);

// min_colors_from(d, u, k)[v] is the fewest colors on a u -> v path when that
// is <= k, or -1. Entry u itself is 0.
std::vector<int> min_colors_from(const ColoredDigraph& d, Vertex u, int k_max);

// All-pairs version; row x, column y.
std::vector<std::vector<int>> min_colors_matrix(const ColoredDigraph& d, int k_max);

// Arc (u, v) iff some u -> v path uses at most k colors.
Digraph k_closure(const ColoredDigraph& d, int k);

// Hop count of a shortest u -> v path.
std::optional<int> distance(const ColoredDigraph& d, Vertex u, Vertex v);
std::vector<std::vector<int>> distance_matrix(const ColoredDigraph& d);  // -1 = unreachable

// Re-checks a witness against d: consecutive arcs exist, vertices distinct,
// colors_used is exactly the arc colors.
bool validate_witness(const ColoredDigraph& d, const PathWitness& w);

enum class DistanceLemma { L1, L2_k2, L2_k3, L3, L4, L5_k2, L5_k3 };

struct DistanceLemmaSpec {
  int forward_colors;   // x reaches y with at most this many colors
  int backward_colors;  // ... and y does not reach x within this many
  int max_distance;     // then d(x, y) must not exceed this
  bool bipartite;       // r == 2 required, else r >= 3
};

DistanceLemmaSpec lemma_spec(DistanceLemma variant);
std::string_view to_string(DistanceLemma variant);
std::optional<DistanceLemma> parse_distance_lemma(std::string_view name);

// Ordered pairs (x, y) whose antecedent holds but whose distance exceeds the
// bound. Coloring hypotheses are the caller's job. Throws WrongPartCount or
// NotSemicomplete when d does not have the variant's structure.
std::vector<std::pair<Vertex, Vertex>> check_distance_lemma(const ColoredDigraph& d, DistanceLemma variant);

}  // namespace ck
