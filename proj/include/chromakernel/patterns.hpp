#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "chromakernel/color_set.hpp"
#include "chromakernel/digraph.hpp"

namespace ck {

enum class PatternKind { C3, C4, C5, C3joinC3, C4joinC4 };

std::string_view to_string(PatternKind kind);
// Accepts the CLI spellings c3, c4, c5, c3c3, c4c4.
std::optional<PatternKind> parse_pattern_kind(std::string_view name);
int pattern_vertex_count(PatternKind kind);
int pattern_arc_count(PatternKind kind);

// One subdigraph occurrence (not necessarily induced).
//   C3..C5:   vertices is the cycle starting at its smallest vertex.
//   C3joinC3: (a, b, c, d), c < d; cycles a->b->c->a and a->b->d->a share a->b.
//   C4joinC4: (p, q, s, x, y), x < y; cycles p->q->s->x->p and p->q->s->y->p
//             share p->q->s.
struct PatternOccurrence {
  PatternKind kind = PatternKind::C3;
  VertexList vertices;
  std::vector<Arc> arcs;
  ColorSet colors;
};

// Return false to stop the stream.
using OccurrenceVisitor = std::function<bool(const PatternOccurrence&)>;

// Streams occurrences in ascending lexicographic order of the vertex tuple.
void for_each_occurrence(const ColoredDigraph& d, PatternKind kind, const OccurrenceVisitor& visit);

std::vector<PatternOccurrence> enumerate_cycles(const ColoredDigraph& d, int length);
std::vector<PatternOccurrence> enumerate_joined(const ColoredDigraph& d, PatternKind kind);
std::vector<PatternOccurrence> enumerate_pattern(const ColoredDigraph& d, PatternKind kind);
std::size_t count_pattern(const ColoredDigraph& d, PatternKind kind);

bool validate_occurrence(const ColoredDigraph& d, const PatternOccurrence& occ);
Json to_json(const PatternOccurrence& occ);

enum class Hypothesis {
  AllC3Monochromatic,
  AllC4Monochromatic,
  AllC4AtMost2Colored,
  AllC5AtMost3Colored,
  AllC3joinC3AtMost2Colored,
  AllC4joinC4AtMost2Colored,
  AllC4joinC4AtMost3Colored,
};
inline constexpr std::size_t kHypothesisCount = 7;
inline constexpr std::array<Hypothesis, kHypothesisCount> kAllHypotheses = {
    Hypothesis::AllC3Monochromatic,        Hypothesis::AllC4Monochromatic,
    Hypothesis::AllC4AtMost2Colored,       Hypothesis::AllC5AtMost3Colored,
    Hypothesis::AllC3joinC3AtMost2Colored, Hypothesis::AllC4joinC4AtMost2Colored,
    Hypothesis::AllC4joinC4AtMost3Colored,
};

// e.g. "all_C4_at_most_2_colored"
std::string_view to_string(Hypothesis h);

// First occurrence breaking h, or nullopt when h holds (vacuously included).
std::optional<PatternOccurrence> find_violation(const ColoredDigraph& d, Hypothesis h);
inline bool holds(const ColoredDigraph& d, Hypothesis h) { return !find_violation(d, h).has_value(); }

class HypothesisReport {
 public:
  bool holds(Hypothesis h) const { return !witness(h).has_value(); }
  const std::optional<PatternOccurrence>& witness(Hypothesis h) const {
    return witnesses_[static_cast<std::size_t>(h)];
  }

  bool all_C3_monochromatic() const { return holds(Hypothesis::AllC3Monochromatic); }
  bool all_C4_monochromatic() const { return holds(Hypothesis::AllC4Monochromatic); }
  bool all_C4_at_most_2_colored() const { return holds(Hypothesis::AllC4AtMost2Colored); }
  bool all_C5_at_most_3_colored() const { return holds(Hypothesis::AllC5AtMost3Colored); }
  bool all_C3joinC3_at_most_2_colored() const { return holds(Hypothesis::AllC3joinC3AtMost2Colored); }
  bool all_C4joinC4_at_most_2_colored() const { return holds(Hypothesis::AllC4joinC4AtMost2Colored); }
  bool all_C4joinC4_at_most_3_colored() const { return holds(Hypothesis::AllC4joinC4AtMost3Colored); }

  Json to_json() const;

 private:
  friend HypothesisReport hypothesis_report(const ColoredDigraph& d);
  std::array<std::optional<PatternOccurrence>, kHypothesisCount> witnesses_;
};

HypothesisReport hypothesis_report(const ColoredDigraph& d);

struct QuasiTransitivity {
  bool holds = true;
  std::optional<std::array<Vertex, 4>> violation;  // u0 -> u1 -> u2 -> u3, u0 and u3 not adjacent
};

QuasiTransitivity is_3_quasi_transitive(const ColoredDigraph& d);

}  // namespace ck
