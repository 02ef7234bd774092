#pragma once

#include <initializer_list>
#include <vector>

#include "chromakernel/digraph.hpp"

namespace ck::fixtures {

inline ColoredDigraph make(int n, int m, std::vector<VertexList> parts, std::vector<Arc> arcs) {
  return build_digraph(RawDigraph{n, m, std::move(parts), std::move(arcs)});
}

inline std::vector<VertexList> singletons(int n) {
  std::vector<VertexList> parts;
  for (Vertex v = 0; v < n; ++v) parts.push_back({v});
  return parts;
}

// Directed 3-cycle 0->1->2->0 with three colors.
inline ColoredDigraph g1() { return make(3, 3, singletons(3), {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}}); }

// Directed 4-cycle 0->1->2->3->0 as a bipartite tournament.
inline ColoredDigraph g3(std::vector<Color> colors = {0, 1, 2, 3}, int m = 4) {
  return make(4, m, {{0, 2}, {1, 3}},
              {{0, 1, colors[0]}, {1, 2, colors[1]}, {2, 3, colors[2]}, {3, 0, colors[3]}});
}

// Star K_{1,s} with every edge doubled; center 0.
inline ColoredDigraph flower(int s, const std::vector<Color>& colors, int m) {
  VertexList leaves;
  std::vector<Arc> arcs;
  for (Vertex v = 1; v <= s; ++v) {
    leaves.push_back(v);
    arcs.push_back({0, v, colors[static_cast<std::size_t>(2 * (v - 1))]});
    arcs.push_back({v, 0, colors[static_cast<std::size_t>(2 * (v - 1) + 1)]});
  }
  return make(s + 1, m, {{0}, leaves}, arcs);
}

// L=0, T=1, R=2, B=3: L->T, T->R, L->B, B->R, R->L.
inline ColoredDigraph c3_join_c3() {
  return make(4, 5, singletons(4), {{0, 1, 0}, {1, 2, 1}, {0, 3, 2}, {3, 2, 3}, {2, 0, 4}});
}

// L=0, M=1, R=2, T=3, B=4: L->M, M->R, R->T, T->L, R->B, B->L.
inline ColoredDigraph c4_join_c4() {
  return make(5, 6, singletons(5), {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 0, 3}, {2, 4, 4}, {4, 0, 5}});
}

inline Digraph plain(int n, std::initializer_list<std::pair<Vertex, Vertex>> arcs) {
  Digraph g(n);
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

}  // namespace ck::fixtures
