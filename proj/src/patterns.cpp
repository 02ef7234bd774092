#include "chromakernel/patterns.hpp"

#include <algorithm>
#include <utility>

#include "chromakernel/error.hpp"

namespace ck {

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::C3: return "C3";
    case PatternKind::C4: return "C4";
    case PatternKind::C5: return "C5";
    case PatternKind::C3joinC3: return "C3joinC3";
    case PatternKind::C4joinC4: return "C4joinC4";
  }
  return "?";
}

std::optional<PatternKind> parse_pattern_kind(std::string_view name) {
  if (name == "c3" || name == "C3") return PatternKind::C3;
  if (name == "c4" || name == "C4") return PatternKind::C4;
  if (name == "c5" || name == "C5") return PatternKind::C5;
  if (name == "c3c3" || name == "C3joinC3") return PatternKind::C3joinC3;
  if (name == "c4c4" || name == "C4joinC4") return PatternKind::C4joinC4;
  return std::nullopt;
}

int pattern_vertex_count(PatternKind kind) {
  switch (kind) {
    case PatternKind::C3: return 3;
    case PatternKind::C4: return 4;
    case PatternKind::C5: return 5;
    case PatternKind::C3joinC3: return 4;
    case PatternKind::C4joinC4: return 5;
  }
  return 0;
}

int pattern_arc_count(PatternKind kind) {
  switch (kind) {
    case PatternKind::C3: return 3;
    case PatternKind::C4: return 4;
    case PatternKind::C5: return 5;
    case PatternKind::C3joinC3: return 5;
    case PatternKind::C4joinC4: return 6;
  }
  return 0;
}

namespace {

PatternOccurrence make_occurrence(const ColoredDigraph& d, PatternKind kind, VertexList vertices,
                                  std::initializer_list<std::pair<int, int>> arc_slots) {
  PatternOccurrence occ;
  occ.kind = kind;
  for (auto [i, j] : arc_slots) {
    const Vertex u = vertices[static_cast<std::size_t>(i)];
    const Vertex v = vertices[static_cast<std::size_t>(j)];
    const Color c = *d.color(u, v);
    occ.arcs.push_back({u, v, c});
    occ.colors.insert(c);
  }
  occ.vertices = std::move(vertices);
  return occ;
}

PatternOccurrence cycle_occurrence(const ColoredDigraph& d, PatternKind kind, const VertexList& path) {
  PatternOccurrence occ;
  occ.kind = kind;
  occ.vertices = path;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex u = path[i];
    const Vertex v = path[(i + 1) % path.size()];
    const Color c = *d.color(u, v);
    occ.arcs.push_back({u, v, c});
    occ.colors.insert(c);
  }
  return occ;
}

// Depth-first extension of path (which starts at its minimum vertex) through
// larger vertices only; each cycle is produced once, in lexicographic order.
bool extend_cycle(const ColoredDigraph& d, PatternKind kind, int length, VertexList& path, std::vector<char>& used,
                  const OccurrenceVisitor& visit) {
  const Vertex start = path.front();
  const Vertex last = path.back();
  if (static_cast<int>(path.size()) == length) {
    if (d.has_arc(last, start)) return visit(cycle_occurrence(d, kind, path));
    return true;
  }
  for (const OutArc& a : d.out(last)) {
    if (a.to <= start || used[static_cast<std::size_t>(a.to)]) continue;
    used[static_cast<std::size_t>(a.to)] = 1;
    path.push_back(a.to);
    const bool go_on = extend_cycle(d, kind, length, path, used, visit);
    path.pop_back();
    used[static_cast<std::size_t>(a.to)] = 0;
    if (!go_on) return false;
  }
  return true;
}

void for_each_cycle(const ColoredDigraph& d, PatternKind kind, int length, const OccurrenceVisitor& visit) {
  std::vector<char> used(static_cast<std::size_t>(d.n()), 0);
  VertexList path;
  for (Vertex s = 0; s < d.n(); ++s) {
    path.assign(1, s);
    used[static_cast<std::size_t>(s)] = 1;
    const bool go_on = extend_cycle(d, kind, length, path, used, visit);
    used[static_cast<std::size_t>(s)] = 0;
    if (!go_on) return;
  }
}

void for_each_c3_join(const ColoredDigraph& d, const OccurrenceVisitor& visit) {
  for (const Arc& ab : d.arcs()) {
    const Vertex a = ab.from;
    const Vertex b = ab.to;
    VertexList thirds;
    for (const OutArc& bc : d.out(b)) {
      if (bc.to != a && d.has_arc(bc.to, a)) thirds.push_back(bc.to);
    }
    for (std::size_t i = 0; i < thirds.size(); ++i) {
      for (std::size_t j = i + 1; j < thirds.size(); ++j) {
        auto occ = make_occurrence(d, PatternKind::C3joinC3, {a, b, thirds[i], thirds[j]},
                                   {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}});
        if (!visit(occ)) return;
      }
    }
  }
}

void for_each_c4_join(const ColoredDigraph& d, const OccurrenceVisitor& visit) {
  for (const Arc& pq : d.arcs()) {
    const Vertex p = pq.from;
    const Vertex q = pq.to;
    for (const OutArc& qs : d.out(q)) {
      const Vertex s = qs.to;
      if (s == p) continue;
      VertexList closers;
      for (const OutArc& sx : d.out(s)) {
        if (sx.to != p && sx.to != q && d.has_arc(sx.to, p)) closers.push_back(sx.to);
      }
      for (std::size_t i = 0; i < closers.size(); ++i) {
        for (std::size_t j = i + 1; j < closers.size(); ++j) {
          auto occ = make_occurrence(d, PatternKind::C4joinC4, {p, q, s, closers[i], closers[j]},
                                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 0}});
          if (!visit(occ)) return;
        }
      }
    }
  }
}

struct HypothesisDef {
  PatternKind kind;
  int max_colors;
};

HypothesisDef definition(Hypothesis h) {
  switch (h) {
    case Hypothesis::AllC3Monochromatic: return {PatternKind::C3, 1};
    case Hypothesis::AllC4Monochromatic: return {PatternKind::C4, 1};
    case Hypothesis::AllC4AtMost2Colored: return {PatternKind::C4, 2};
    case Hypothesis::AllC5AtMost3Colored: return {PatternKind::C5, 3};
    case Hypothesis::AllC3joinC3AtMost2Colored: return {PatternKind::C3joinC3, 2};
    case Hypothesis::AllC4joinC4AtMost2Colored: return {PatternKind::C4joinC4, 2};
    case Hypothesis::AllC4joinC4AtMost3Colored: return {PatternKind::C4joinC4, 3};
  }
  return {PatternKind::C3, 0};
}

}  // namespace

void for_each_occurrence(const ColoredDigraph& d, PatternKind kind, const OccurrenceVisitor& visit) {
  switch (kind) {
    case PatternKind::C3: for_each_cycle(d, kind, 3, visit); break;
    case PatternKind::C4: for_each_cycle(d, kind, 4, visit); break;
    case PatternKind::C5: for_each_cycle(d, kind, 5, visit); break;
    case PatternKind::C3joinC3: for_each_c3_join(d, visit); break;
    case PatternKind::C4joinC4: for_each_c4_join(d, visit); break;
  }
}

std::vector<PatternOccurrence> enumerate_pattern(const ColoredDigraph& d, PatternKind kind) {
  std::vector<PatternOccurrence> out;
  for_each_occurrence(d, kind, [&](const PatternOccurrence& occ) {
    out.push_back(occ);
    return true;
  });
  return out;
}

std::vector<PatternOccurrence> enumerate_cycles(const ColoredDigraph& d, int length) {
  switch (length) {
    case 3: return enumerate_pattern(d, PatternKind::C3);
    case 4: return enumerate_pattern(d, PatternKind::C4);
    case 5: return enumerate_pattern(d, PatternKind::C5);
    default: throw Error(ErrorKind::InvalidParams, "cycle length must be 3, 4 or 5");
  }
}

std::vector<PatternOccurrence> enumerate_joined(const ColoredDigraph& d, PatternKind kind) {
  if (kind != PatternKind::C3joinC3 && kind != PatternKind::C4joinC4) {
    throw Error(ErrorKind::InvalidParams, "joined pattern must be C3joinC3 or C4joinC4");
  }
  return enumerate_pattern(d, kind);
}

std::size_t count_pattern(const ColoredDigraph& d, PatternKind kind) {
  std::size_t count = 0;
  for_each_occurrence(d, kind, [&](const PatternOccurrence&) {
    ++count;
    return true;
  });
  return count;
}

bool validate_occurrence(const ColoredDigraph& d, const PatternOccurrence& occ) {
  if (static_cast<int>(occ.vertices.size()) != pattern_vertex_count(occ.kind)) return false;
  if (static_cast<int>(occ.arcs.size()) != pattern_arc_count(occ.kind)) return false;
  VertexList sorted = occ.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  ColorSet colors;
  for (const Arc& a : occ.arcs) {
    const auto c = d.color(a.from, a.to);
    if (!c || *c != a.color) return false;
    if (std::find(occ.vertices.begin(), occ.vertices.end(), a.from) == occ.vertices.end()) return false;
    if (std::find(occ.vertices.begin(), occ.vertices.end(), a.to) == occ.vertices.end()) return false;
    colors.insert(a.color);
  }
  return colors == occ.colors;
}

Json to_json(const PatternOccurrence& occ) {
  Json j;
  j["kind"] = to_string(occ.kind);
  j["vertices"] = occ.vertices;
  Json arcs = Json::array();
  for (const Arc& a : occ.arcs) arcs.push_back({a.from, a.to, a.color});
  j["arcs"] = std::move(arcs);
  j["colors"] = occ.colors.to_vector();
  return j;
}

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::AllC3Monochromatic: return "all_C3_monochromatic";
    case Hypothesis::AllC4Monochromatic: return "all_C4_monochromatic";
    case Hypothesis::AllC4AtMost2Colored: return "all_C4_at_most_2_colored";
    case Hypothesis::AllC5AtMost3Colored: return "all_C5_at_most_3_colored";
    case Hypothesis::AllC3joinC3AtMost2Colored: return "all_C3joinC3_at_most_2_colored";
    case Hypothesis::AllC4joinC4AtMost2Colored: return "all_C4joinC4_at_most_2_colored";
    case Hypothesis::AllC4joinC4AtMost3Colored: return "all_C4joinC4_at_most_3_colored";
  }
  return "?";
}

std::optional<PatternOccurrence> find_violation(const ColoredDigraph& d, Hypothesis h) {
  const HypothesisDef def = definition(h);
  std::optional<PatternOccurrence> bad;
  for_each_occurrence(d, def.kind, [&](const PatternOccurrence& occ) {
    if (occ.colors.size() <= def.max_colors) return true;
    bad = occ;
    return false;
  });
  return bad;
}

HypothesisReport hypothesis_report(const ColoredDigraph& d) {
  HypothesisReport report;
  for (Hypothesis h : kAllHypotheses) report.witnesses_[static_cast<std::size_t>(h)] = find_violation(d, h);
  return report;
}

Json HypothesisReport::to_json() const {
  Json j;
  Json witnesses = Json::object();
  for (Hypothesis h : kAllHypotheses) {
    const std::string name(ck::to_string(h));
    j[name] = holds(h);
    if (const auto& w = witness(h)) witnesses[name] = ck::to_json(*w);
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

QuasiTransitivity is_3_quasi_transitive(const ColoredDigraph& d) {
  for (Vertex u0 = 0; u0 < d.n(); ++u0) {
    for (const OutArc& a1 : d.out(u0)) {
      const Vertex u1 = a1.to;
      for (const OutArc& a2 : d.out(u1)) {
        const Vertex u2 = a2.to;
        if (u2 == u0) continue;
        for (const OutArc& a3 : d.out(u2)) {
          const Vertex u3 = a3.to;
          if (u3 == u0 || u3 == u1) continue;
          if (!d.has_arc(u0, u3) && !d.has_arc(u3, u0)) {
            return QuasiTransitivity{false, std::array<Vertex, 4>{u0, u1, u2, u3}};
          }
        }
      }
    }
  }
  return {};
}

}  // namespace ck
