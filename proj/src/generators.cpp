#include "chromakernel/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "chromakernel/error.hpp"
#include "chromakernel/patterns.hpp"
#include "chromakernel/random.hpp"
#include "chromakernel/union_find.hpp"

namespace ck {

void validate(const GenParams& params) {
  if (params.part_sizes.size() < 2) throw Error(ErrorKind::InvalidParams, "need at least 2 parts");
  for (int s : params.part_sizes) {
    if (s < 1) throw Error(ErrorKind::InvalidParams, "part sizes must be positive");
  }
  if (!(params.p_symmetric >= 0.0 && params.p_symmetric <= 1.0)) {
    throw Error(ErrorKind::InvalidParams, "p_symmetric must lie in [0, 1]");
  }
  if (!(params.orientation_bias >= 0.0 && params.orientation_bias <= 1.0)) {
    throw Error(ErrorKind::InvalidParams, "orientation_bias must lie in [0, 1]");
  }
  if (params.m < 1 || params.m > ColorSet::kCapacity) {
    throw Error(ErrorKind::InvalidParams, "m must lie in 1.." + std::to_string(ColorSet::kCapacity));
  }
}

Json to_json(const GenParams& params) {
  Json j;
  j["part_sizes"] = params.part_sizes;
  j["p_symmetric"] = params.p_symmetric;
  j["orientation_bias"] = params.orientation_bias;
  j["m"] = params.m;
  j["color_distribution"] = "uniform";
  j["seed"] = params.seed;
  return j;
}

GenParams gen_params_from_json(const Json& j) {
  GenParams p;
  try {
    p.part_sizes = j.at("part_sizes").get<std::vector<int>>();
    p.p_symmetric = j.value("p_symmetric", 0.0);
    p.orientation_bias = j.value("orientation_bias", 0.5);
    p.m = j.at("m").get<int>();
    p.seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  validate(p);
  return p;
}

std::vector<VertexList> consecutive_parts(std::span<const int> part_sizes) {
  std::vector<VertexList> parts;
  Vertex next = 0;
  for (int s : part_sizes) {
    VertexList part(static_cast<std::size_t>(s));
    std::iota(part.begin(), part.end(), next);
    next += s;
    parts.push_back(std::move(part));
  }
  return parts;
}

namespace {

std::vector<std::pair<Vertex, Vertex>> cross_pairs_of(const std::vector<VertexList>& parts, int n) {
  std::vector<int> part_of(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (Vertex v : parts[p]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

int total_vertices(std::span<const int> part_sizes) { return std::accumulate(part_sizes.begin(), part_sizes.end(), 0); }

}  // namespace

ColoredDigraph random_colored_smp(const GenParams& params) {
  validate(params);
  Rng rng(params.seed);
  RawDigraph raw;
  raw.n = total_vertices(params.part_sizes);
  raw.m = params.m;
  raw.parts = consecutive_parts(params.part_sizes);
  const auto m = static_cast<std::uint64_t>(params.m);
  for (auto [u, v] : cross_pairs_of(raw.parts, raw.n)) {
    if (rng.chance(params.p_symmetric)) {
      raw.arcs.push_back({u, v, static_cast<Color>(rng.below(m))});
      raw.arcs.push_back({v, u, static_cast<Color>(rng.below(m))});
    } else if (rng.chance(params.orientation_bias)) {
      raw.arcs.push_back({u, v, static_cast<Color>(rng.below(m))});
    } else {
      raw.arcs.push_back({v, u, static_cast<Color>(rng.below(m))});
    }
  }
  return build_digraph(std::move(raw));
}

SmpEnumeration::SmpEnumeration(std::vector<int> part_sizes, bool allow_symmetric, std::uint64_t budget)
    : part_sizes_(std::move(part_sizes)), allow_symmetric_(allow_symmetric) {
  if (part_sizes_.size() < 2) throw Error(ErrorKind::InvalidParams, "need at least 2 parts");
  for (int s : part_sizes_) {
    if (s < 1) throw Error(ErrorKind::InvalidParams, "part sizes must be positive");
  }
  parts_ = consecutive_parts(part_sizes_);
  pairs_ = cross_pairs_of(parts_, total_vertices(part_sizes_));
  const std::uint64_t radix = allow_symmetric_ ? 3 : 2;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (total_ > budget / radix) {
      throw Error(ErrorKind::BudgetExceeded, std::to_string(radix) + "^" + std::to_string(pairs_.size()) +
                                                 " orientations exceed the budget of " + std::to_string(budget));
    }
    total_ *= radix;
  }
  if (total_ > budget) throw Error(ErrorKind::BudgetExceeded, "orientation count exceeds the budget");
}

ColoredDigraph SmpEnumeration::at(std::uint64_t index) const {
  if (index >= total_) throw Error(ErrorKind::InvalidParams, "enumeration index out of range");
  const std::uint64_t radix = allow_symmetric_ ? 3 : 2;
  RawDigraph raw;
  raw.n = total_vertices(part_sizes_);
  raw.m = 1;
  raw.parts = parts_;
  for (auto [u, v] : pairs_) {
    const std::uint64_t digit = index % radix;
    index /= radix;
    if (digit != 1) raw.arcs.push_back({u, v, 0});
    if (digit != 0) raw.arcs.push_back({v, u, 0});
  }
  return build_digraph(std::move(raw));
}

SmpStream::SmpStream(std::vector<int> part_sizes, bool allow_symmetric, std::uint64_t cursor, std::uint64_t budget)
    : enumeration_(std::move(part_sizes), allow_symmetric, budget), cursor_(cursor) {
  if (cursor_ > enumeration_.total()) throw Error(ErrorKind::InvalidParams, "cursor past the end of the enumeration");
}

std::optional<ColoredDigraph> SmpStream::next() {
  if (cursor_ >= enumeration_.total()) return std::nullopt;
  return enumeration_.at(cursor_++);
}

std::string format_cursor(std::uint64_t cursor) { return std::to_string(cursor); }

std::uint64_t parse_cursor(const std::string& text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::ParseError, "cursor must be a decimal integer, got \"" + text + "\"");
  }
  return value;
}

namespace {

// Colors become dense ids in order of each class's smallest arc index.
ColoredDigraph apply_classes(const ColoredDigraph& d, UnionFind& classes) {
  const std::vector<int> labels = classes.labels();
  const int count = labels.empty() ? 1 : *std::max_element(labels.begin(), labels.end()) + 1;
  return d.recolored(labels, count);
}

}  // namespace

FinestColoring finest_short_cycle_coloring_with_history(const ColoredDigraph& d, std::span<const int> lengths) {
  UnionFind classes(d.arc_count());
  for (int len : lengths) {
    if (len != 3 && len != 4) throw Error(ErrorKind::InvalidParams, "cycle lengths must be 3 or 4");
    for_each_occurrence(d, len == 3 ? PatternKind::C3 : PatternKind::C4, [&](const PatternOccurrence& occ) {
      const auto first = static_cast<std::size_t>(d.arc_index(occ.arcs.front().from, occ.arcs.front().to));
      for (const Arc& a : occ.arcs) classes.unite(first, static_cast<std::size_t>(d.arc_index(a.from, a.to)));
      return true;
    });
  }
  FinestColoring out{apply_classes(d, classes), classes.history()};
  return out;
}

ColoredDigraph finest_short_cycle_coloring(const ColoredDigraph& d, std::span<const int> lengths) {
  return finest_short_cycle_coloring_with_history(d, lengths).digraph;
}

ColoredDigraph coarsen_coloring(const ColoredDigraph& d, int merge_count, std::uint64_t seed) {
  const int used = d.used_color_count();
  if (merge_count < 0) throw Error(ErrorKind::InvalidParams, "merge_count must be non-negative");
  if (merge_count == 0) return d;
  if (merge_count >= used) {
    throw Error(ErrorKind::InvalidParams, "merge_count " + std::to_string(merge_count) +
                                              " must be below the " + std::to_string(used) + " colors in use");
  }
  // Classes indexed by rank of the used color.
  std::vector<int> rank(static_cast<std::size_t>(d.m()), -1);
  {
    int next = 0;
    std::vector<char> present(static_cast<std::size_t>(d.m()), 0);
    for (const Arc& a : d.arcs()) present[static_cast<std::size_t>(a.color)] = 1;
    for (std::size_t c = 0; c < present.size(); ++c) {
      if (present[c]) rank[c] = next++;
    }
  }
  UnionFind classes(static_cast<std::size_t>(used));
  Rng rng(seed);
  for (int step = 0; step < merge_count; ++step) {
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes.find(i) == i) roots.push_back(i);
    }
    const auto c = static_cast<std::uint64_t>(roots.size());
    const auto i = rng.below(c);
    auto j = rng.below(c - 1);
    if (j >= i) ++j;
    classes.unite(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]);
  }
  // Relabel arcs by the class of their old color, classes numbered by smallest arc.
  std::vector<int> label_of_class(static_cast<std::size_t>(used), -1);
  std::vector<Color> colors;
  int next = 0;
  for (const Arc& a : d.arcs()) {
    int& l = label_of_class[classes.find(static_cast<std::size_t>(rank[static_cast<std::size_t>(a.color)]))];
    if (l < 0) l = next++;
    colors.push_back(l);
  }
  return d.recolored(colors, next);
}

Digraph random_mixed_digraph(const MixedDigraphParams& params) {
  if (params.n < 1) throw Error(ErrorKind::InvalidParams, "n must be positive");
  Rng rng(params.seed);
  VertexList order(static_cast<std::size_t>(params.n));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<int> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  Digraph g(params.n);
  for (Vertex u = 0; u < params.n; ++u) {
    for (Vertex v = u + 1; v < params.n; ++v) {
      if (!rng.chance(params.p_arc)) continue;
      if (rng.chance(params.p_symmetric)) {
        g.add_arc(u, v);
        g.add_arc(v, u);
      } else if (params.acyclic_asymmetric) {
        if (position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)]) {
          g.add_arc(u, v);
        } else {
          g.add_arc(v, u);
        }
      } else if (rng.chance(0.5)) {
        g.add_arc(u, v);
      } else {
        g.add_arc(v, u);
      }
    }
  }
  return g;
}

}  // namespace ck
