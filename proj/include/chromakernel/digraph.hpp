#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "chromakernel/color_set.hpp"

namespace ck {

using Vertex = int;
using VertexList = std::vector<Vertex>;
using Json = nlohmann::ordered_json;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  Color color = 0;

  bool operator==(const Arc&) const = default;
};

struct OutArc {
  Vertex to = 0;
  Color color = 0;
};

// Unvalidated digraph description, as read from a file or assembled by a
// generator. build_digraph() turns it into a ColoredDigraph.
struct RawDigraph {
  int n = 0;
  int m = 1;
  std::vector<VertexList> parts;
  std::vector<Arc> arcs;
};

class Digraph;

// Arc-colored digraph with an explicit vertex partition. Immutable once built;
// safe to share across threads.
class ColoredDigraph {
 public:
  int n() const { return n_; }
  int m() const { return m_; }
  int r() const { return static_cast<int>(parts_.size()); }
  const std::vector<VertexList>& parts() const { return parts_; }
  int part_of(Vertex v) const { return part_of_[static_cast<std::size_t>(v)]; }

  bool has_arc(Vertex u, Vertex v) const { return arc_index(u, v) >= 0; }
  // Index into arcs(), or -1 when (u, v) is not an arc.
  int arc_index(Vertex u, Vertex v) const {
    return index_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  std::optional<Color> color(Vertex u, Vertex v) const {
    const int i = arc_index(u, v);
    if (i < 0) return std::nullopt;
    return arcs_[static_cast<std::size_t>(i)].color;
  }

  // Arcs sorted by (from, to).
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }
  // Out-arcs of u sorted by head.
  std::span<const OutArc> out(Vertex u) const { return out_[static_cast<std::size_t>(u)]; }

  // Number of distinct colors that actually appear on arcs.
  int used_color_count() const;

  // Same vertices, parts and arcs; color of arcs()[i] becomes colors[i].
  ColoredDigraph recolored(std::span<const Color> colors, int m) const;

  RawDigraph raw() const;
  Digraph uncolored() const;

  bool operator==(const ColoredDigraph& other) const {
    return n_ == other.n_ && m_ == other.m_ && parts_ == other.parts_ && arcs_ == other.arcs_;
  }

 private:
  friend ColoredDigraph build_digraph(RawDigraph raw);
  ColoredDigraph() = default;

  int n_ = 0;
  int m_ = 1;
  std::vector<VertexList> parts_;
  std::vector<int> part_of_;
  std::vector<Arc> arcs_;
  std::vector<int> index_;
  std::vector<std::vector<OutArc>> out_;
};

// Plain digraph on vertices 0..n-1 (closures, kernel solver inputs).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int n() const { return n_; }
  bool has_arc(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
  }
  // Adds (u, v); loops and out-of-range endpoints throw.
  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);
  std::size_t arc_count() const;
  VertexList out_neighbors(Vertex u) const;
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

struct StructureClass {
  bool is_semicomplete_multipartite = false;
  bool is_bipartite = false;
  bool is_tournament = false;
  int r = 0;
};

// Validates raw. Throws Error with DuplicateArc, IntraPartArc, ColorOutOfRange,
// PartsNotPartition, LoopArc, VertexOutOfRange or TooManyColors.
ColoredDigraph build_digraph(RawDigraph raw);

StructureClass classify(const ColoredDigraph& d);

// Keeps exactly the arcs whose reverse is absent.
ColoredDigraph asymmetric_subdigraph(const ColoredDigraph& d);

// Closure-style digraphs have no partition; each vertex becomes its own part
// and every arc gets color 0 with m = 1.
ColoredDigraph as_colored(const Digraph& g);

Json to_json(const ColoredDigraph& d);
ColoredDigraph digraph_from_json(const Json& j);

// Canonical text form: arcs sorted by (u, v), one per line.
std::string serialize(const ColoredDigraph& d);
ColoredDigraph parse_digraph(const std::string& text);

ColoredDigraph load_digraph(const std::string& path);
void save_digraph(const ColoredDigraph& d, const std::string& path);

std::string format_vertex_set(std::span<const Vertex> vs);

}  // namespace ck
