#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chromakernel/digraph.hpp"

namespace ck {

struct GenParams {
  std::vector<int> part_sizes;
  double p_symmetric = 0.0;
  double orientation_bias = 0.5;  // P(u -> v) for a single arc between u < v
  int m = 1;
  std::uint64_t seed = 0;
};

void validate(const GenParams& params);  // throws InvalidParams
Json to_json(const GenParams& params);
GenParams gen_params_from_json(const Json& j);

// Vertices are numbered part by part: part 0 gets 0..s0-1, and so on.
std::vector<VertexList> consecutive_parts(std::span<const int> part_sizes);

// Pure function of params. Cross pairs are visited in ascending (u, v) order;
// each gets both arcs with probability p_symmetric, otherwise one arc oriented
// by orientation_bias. Arc colors are uniform over 0..m-1.
ColoredDigraph random_colored_smp(const GenParams& params);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

// Every labeled semicomplete multipartite orientation of the given parts, in
// mixed-radix order over cross pairs (pair 0 is the least significant digit;
// digit 0: u -> v, 1: v -> u, 2: both). Items carry color 0 and m = 1.
class SmpEnumeration {
 public:
  SmpEnumeration(std::vector<int> part_sizes, bool allow_symmetric,
                 std::uint64_t budget = kDefaultEnumerationBudget);

  std::uint64_t total() const { return total_; }
  const std::vector<std::pair<Vertex, Vertex>>& cross_pairs() const { return pairs_; }
  ColoredDigraph at(std::uint64_t index) const;

 private:
  std::vector<int> part_sizes_;
  bool allow_symmetric_;
  std::vector<VertexList> parts_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::uint64_t total_ = 1;
};

// Resumable stream over an SmpEnumeration; cursor() is the index of the next
// item, so a stream rebuilt from it continues where this one stopped.
class SmpStream {
 public:
  SmpStream(std::vector<int> part_sizes, bool allow_symmetric, std::uint64_t cursor = 0,
            std::uint64_t budget = kDefaultEnumerationBudget);

  std::optional<ColoredDigraph> next();
  std::uint64_t cursor() const { return cursor_; }
  const SmpEnumeration& enumeration() const { return enumeration_; }

 private:
  SmpEnumeration enumeration_;
  std::uint64_t cursor_;
};

std::string format_cursor(std::uint64_t cursor);
std::uint64_t parse_cursor(const std::string& text);  // throws ParseError

struct FinestColoring {
  ColoredDigraph digraph;
  // Successful merges in order, as pairs of arc indices (into arcs()).
  std::vector<std::pair<std::size_t, std::size_t>> merges;
};

// Finest arc coloring in which every directed cycle of the requested lengths
// (each 3 or 4) is monochromatic. Colors are numbered by their smallest arc.
FinestColoring finest_short_cycle_coloring_with_history(const ColoredDigraph& d, std::span<const int> lengths);
ColoredDigraph finest_short_cycle_coloring(const ColoredDigraph& d, std::span<const int> lengths);

// merge_count random merges of color classes; merge_count must be smaller
// than the number of colors in use (0 returns d unchanged).
ColoredDigraph coarsen_coloring(const ColoredDigraph& d, int merge_count, std::uint64_t seed);

struct MixedDigraphParams {
  int n = 1;
  double p_arc = 0.5;        // chance a pair is joined at all
  double p_symmetric = 0.3;  // chance a joined pair gets both arcs
  bool acyclic_asymmetric = false;  // orient single arcs along a random order
  std::uint64_t seed = 0;
};

// General (not multipartite) digraph used to exercise the plain kernel solver.
Digraph random_mixed_digraph(const MixedDigraphParams& params);

}  // namespace ck
