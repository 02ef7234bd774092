#include "chromakernel/chroma_paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "chromakernel/error.hpp"

namespace ck {

namespace {

void check_vertex(const ColoredDigraph& d, Vertex v) {
  if (v < 0 || v >= d.n()) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(d.n() - 1));
  }
}

struct SearchState {
  Vertex vertex;
  ColorSet colors;
  int parent;
};

// Breadth-first search over (vertex, color set) states starting at (source, {}).
// A state is dropped when its color set exceeds max_colors or when a visited
// state at the same vertex carries a subset of its colors. Because colors only
// accumulate, a revisit of a vertex on the current walk is always dominated, so
// every surviving parent chain is a simple path.
class ColorStateSearch {
 public:
  ColorStateSearch(const ColoredDigraph& d, Vertex source, int max_colors)
      : d_(d), max_colors_(max_colors), frontier_(static_cast<std::size_t>(d.n())) {
    push({source, ColorSet{}, -1});
  }

  // Runs until target is generated (returns its state index) or the space is
  // exhausted (returns -1). target < 0 exhausts.
  int run(Vertex target) {
    while (head_ < states_.size()) {
      const SearchState cur = states_[head_++];
      for (const OutArc& a : d_.out(cur.vertex)) {
        const ColorSet next = cur.colors.with(a.color);
        if (next.size() > max_colors_) continue;
        if (dominated(a.to, next)) continue;
        push({a.to, next, static_cast<int>(head_ - 1)});
        if (a.to == target) return static_cast<int>(states_.size() - 1);
      }
    }
    return -1;
  }

  const std::vector<ColorSet>& sets_at(Vertex v) const { return frontier_[static_cast<std::size_t>(v)]; }

  PathWitness witness(int state) const {
    PathWitness w;
    w.colors_used = states_[static_cast<std::size_t>(state)].colors;
    for (int i = state; i >= 0; i = states_[static_cast<std::size_t>(i)].parent) {
      w.vertices.push_back(states_[static_cast<std::size_t>(i)].vertex);
    }
    std::reverse(w.vertices.begin(), w.vertices.end());
    return w;
  }

 private:
  bool dominated(Vertex v, ColorSet s) const {
    const auto& seen = frontier_[static_cast<std::size_t>(v)];
    return std::any_of(seen.begin(), seen.end(), [s](ColorSet t) { return t.is_subset_of(s); });
  }

  void push(SearchState st) {
    frontier_[static_cast<std::size_t>(st.vertex)].push_back(st.colors);
    states_.push_back(st);
  }

  const ColoredDigraph& d_;
  int max_colors_;
  std::vector<SearchState> states_;
  std::size_t head_ = 0;
  std::vector<std::vector<ColorSet>> frontier_;
};

int clamp_colors(const ColoredDigraph& d, int k) { return std::min(k, d.m()); }

}  // namespace

std::optional<ColoredPath> min_colors_path(const ColoredDigraph& d, Vertex u, Vertex v, int k_max) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (u == v) throw Error(ErrorKind::InvalidParams, "path endpoints must differ");
  if (k_max < 1) throw Error(ErrorKind::InvalidParams, "k_max must be at least 1");
  const int limit = clamp_colors(d, k_max);
  for (int k = 1; k <= limit; ++k) {
    ColorStateSearch search(d, u, k);
    const int hit = search.run(v);
    if (hit >= 0) {
      ColoredPath p;
      p.witness = search.witness(hit);
      p.colors = p.witness.colors_used.size();
      return p;
    }
  }
  return std::nullopt;
}

std::vector<int> min_colors_from(const ColoredDigraph& d, Vertex u, int k_max) {
  check_vertex(d, u);
  if (k_max < 1) throw Error(ErrorKind::InvalidParams, "k_max must be at least 1");
  ColorStateSearch search(d, u, clamp_colors(d, k_max));
  search.run(-1);
  std::vector<int> best(static_cast<std::size_t>(d.n()), -1);
  for (Vertex v = 0; v < d.n(); ++v) {
    for (ColorSet s : search.sets_at(v)) {
      int& b = best[static_cast<std::size_t>(v)];
      if (b < 0 || s.size() < b) b = s.size();
    }
  }
  best[static_cast<std::size_t>(u)] = 0;
  return best;
}

std::vector<std::vector<int>> min_colors_matrix(const ColoredDigraph& d, int k_max) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(d.n()));
  for (Vertex u = 0; u < d.n(); ++u) out.push_back(min_colors_from(d, u, k_max));
  return out;
}

Digraph k_closure(const ColoredDigraph& d, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "k must be at least 1");
  Digraph g(d.n());
  for (Vertex u = 0; u < d.n(); ++u) {
    ColorStateSearch search(d, u, clamp_colors(d, k));
    search.run(-1);
    for (Vertex v = 0; v < d.n(); ++v) {
      if (v != u && !search.sets_at(v).empty()) g.add_arc(u, v);
    }
  }
  return g;
}

namespace {

std::vector<int> bfs_hops(const ColoredDigraph& d, Vertex u) {
  std::vector<int> dist(static_cast<std::size_t>(d.n()), -1);
  std::deque<Vertex> queue{u};
  dist[static_cast<std::size_t>(u)] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const OutArc& a : d.out(x)) {
      int& dy = dist[static_cast<std::size_t>(a.to)];
      if (dy < 0) {
        dy = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<int> distance(const ColoredDigraph& d, Vertex u, Vertex v) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (u == v) throw Error(ErrorKind::InvalidParams, "distance endpoints must differ");
  const int hops = bfs_hops(d, u)[static_cast<std::size_t>(v)];
  if (hops < 0) return std::nullopt;
  return hops;
}

std::vector<std::vector<int>> distance_matrix(const ColoredDigraph& d) {
  std::vector<std::vector<int>> out;
  for (Vertex u = 0; u < d.n(); ++u) out.push_back(bfs_hops(d, u));
  return out;
}

bool validate_witness(const ColoredDigraph& d, const PathWitness& w) {
  if (w.vertices.size() < 2) return false;
  std::vector<char> seen(static_cast<std::size_t>(d.n()), 0);
  ColorSet colors;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const Vertex v = w.vertices[i];
    if (v < 0 || v >= d.n() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    if (i + 1 < w.vertices.size()) {
      const auto c = d.color(v, w.vertices[i + 1]);
      if (!c) return false;
      colors.insert(*c);
    }
  }
  return colors == w.colors_used;
}

DistanceLemmaSpec lemma_spec(DistanceLemma variant) {
  switch (variant) {
    case DistanceLemma::L1: return {4, 4, 2, false};
    case DistanceLemma::L2_k2: return {2, 2, 4, false};
    case DistanceLemma::L2_k3: return {3, 3, 4, false};
    case DistanceLemma::L3: return {3, 3, 2, false};
    case DistanceLemma::L4: return {2, 2, 2, false};
    case DistanceLemma::L5_k2: return {2, 2, 2, true};
    case DistanceLemma::L5_k3: return {3, 3, 2, true};
  }
  return {0, 0, 0, false};
}

std::string_view to_string(DistanceLemma variant) {
  switch (variant) {
    case DistanceLemma::L1: return "L1";
    case DistanceLemma::L2_k2: return "L2_k2";
    case DistanceLemma::L2_k3: return "L2_k3";
    case DistanceLemma::L3: return "L3";
    case DistanceLemma::L4: return "L4";
    case DistanceLemma::L5_k2: return "L5_k2";
    case DistanceLemma::L5_k3: return "L5_k3";
  }
  return "?";
}

std::optional<DistanceLemma> parse_distance_lemma(std::string_view name) {
  for (auto v : {DistanceLemma::L1, DistanceLemma::L2_k2, DistanceLemma::L2_k3, DistanceLemma::L3,
                 DistanceLemma::L4, DistanceLemma::L5_k2, DistanceLemma::L5_k3}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> check_distance_lemma(const ColoredDigraph& d, DistanceLemma variant) {
  const DistanceLemmaSpec spec = lemma_spec(variant);
  const StructureClass sc = classify(d);
  if (spec.bipartite ? sc.r != 2 : sc.r < 3) {
    throw Error(ErrorKind::WrongPartCount, std::string(to_string(variant)) + " needs " +
                                               (spec.bipartite ? "r = 2" : "r >= 3") + ", got r = " +
                                               std::to_string(sc.r));
  }
  if (!sc.is_semicomplete_multipartite) {
    throw Error(ErrorKind::NotSemicomplete, std::string(to_string(variant)) + " needs a semicomplete digraph");
  }
  const auto colors = min_colors_matrix(d, std::max(spec.forward_colors, spec.backward_colors));
  const auto hops = distance_matrix(d);
  auto within = [](int c, int bound) { return c >= 0 && c <= bound; };

  std::vector<std::pair<Vertex, Vertex>> violations;
  for (Vertex x = 0; x < d.n(); ++x) {
    for (Vertex y = 0; y < d.n(); ++y) {
      if (x == y) continue;
      const auto xs = static_cast<std::size_t>(x);
      const auto ys = static_cast<std::size_t>(y);
      if (!within(colors[xs][ys], spec.forward_colors)) continue;
      if (within(colors[ys][xs], spec.backward_colors)) continue;
      if (hops[xs][ys] > spec.max_distance) violations.emplace_back(x, y);
    }
  }
  return violations;
}

}  // namespace ck
