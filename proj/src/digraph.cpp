#include "chromakernel/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "chromakernel/error.hpp"

namespace ck {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::IntraPartArc: return "IntraPartArc";
    case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::PartsNotPartition: return "PartsNotPartition";
    case ErrorKind::LoopArc: return "LoopArc";
    case ErrorKind::TooManyColors: return "TooManyColors";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::WrongPartCount: return "WrongPartCount";
    case ErrorKind::NotSemicomplete: return "NotSemicomplete";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidCampaign: return "InvalidCampaign";
    case ErrorKind::CorruptCheckpoint: return "CorruptCheckpoint";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string pair_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

ColoredDigraph build_digraph(RawDigraph raw) {
  if (raw.n < 1) throw Error(ErrorKind::PartsNotPartition, "digraph needs at least one vertex");
  if (raw.m < 1) throw Error(ErrorKind::ColorOutOfRange, "color budget m must be at least 1");
  if (raw.m > ColorSet::kCapacity) {
    throw Error(ErrorKind::TooManyColors,
                "m = " + std::to_string(raw.m) + " exceeds " + std::to_string(ColorSet::kCapacity));
  }

  const auto n = static_cast<std::size_t>(raw.n);
  std::vector<int> part_of(n, -1);
  for (std::size_t p = 0; p < raw.parts.size(); ++p) {
    if (raw.parts[p].empty()) {
      throw Error(ErrorKind::PartsNotPartition, "part " + std::to_string(p) + " is empty");
    }
    for (Vertex v : raw.parts[p]) {
      if (v < 0 || v >= raw.n) {
        throw Error(ErrorKind::PartsNotPartition, "vertex " + std::to_string(v) + " out of range");
      }
      if (part_of[static_cast<std::size_t>(v)] >= 0) {
        throw Error(ErrorKind::PartsNotPartition,
                    "vertex " + std::to_string(v) + " appears in more than one part");
      }
      part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (part_of[v] < 0) {
      throw Error(ErrorKind::PartsNotPartition, "vertex " + std::to_string(v) + " is in no part");
    }
  }

  std::vector<int> seen(n * n, 0);
  for (const Arc& a : raw.arcs) {
    if (a.from < 0 || a.from >= raw.n || a.to < 0 || a.to >= raw.n) {
      throw Error(ErrorKind::VertexOutOfRange, "arc " + pair_str(a.from, a.to));
    }
    if (a.from == a.to) throw Error(ErrorKind::LoopArc, "arc " + pair_str(a.from, a.to));
    if (a.color < 0 || a.color >= raw.m) {
      throw Error(ErrorKind::ColorOutOfRange, "arc " + pair_str(a.from, a.to) + " has color " +
                                                  std::to_string(a.color) + " but m = " +
                                                  std::to_string(raw.m));
    }
    if (part_of[static_cast<std::size_t>(a.from)] == part_of[static_cast<std::size_t>(a.to)]) {
      throw Error(ErrorKind::IntraPartArc, "arc " + pair_str(a.from, a.to));
    }
    int& slot = seen[static_cast<std::size_t>(a.from) * n + static_cast<std::size_t>(a.to)];
    if (slot != 0) throw Error(ErrorKind::DuplicateArc, "arc " + pair_str(a.from, a.to));
    slot = 1;
  }

  ColoredDigraph d;
  d.n_ = raw.n;
  d.m_ = raw.m;
  for (auto& part : raw.parts) std::sort(part.begin(), part.end());
  d.parts_ = std::move(raw.parts);
  d.part_of_ = std::move(part_of);
  d.arcs_ = std::move(raw.arcs);
  std::sort(d.arcs_.begin(), d.arcs_.end(), [](const Arc& a, const Arc& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  d.index_.assign(n * n, -1);
  d.out_.assign(n, {});
  for (std::size_t i = 0; i < d.arcs_.size(); ++i) {
    const Arc& a = d.arcs_[i];
    d.index_[static_cast<std::size_t>(a.from) * n + static_cast<std::size_t>(a.to)] = static_cast<int>(i);
    d.out_[static_cast<std::size_t>(a.from)].push_back({a.to, a.color});
  }
  return d;
}

int ColoredDigraph::used_color_count() const {
  ColorSet used;
  for (const Arc& a : arcs_) used.insert(a.color);
  return used.size();
}

ColoredDigraph ColoredDigraph::recolored(std::span<const Color> colors, int m) const {
  if (colors.size() != arcs_.size()) {
    throw Error(ErrorKind::InvalidParams, "recoloring needs one color per arc");
  }
  RawDigraph r = raw();
  r.m = m;
  for (std::size_t i = 0; i < r.arcs.size(); ++i) r.arcs[i].color = colors[i];
  return build_digraph(std::move(r));
}

RawDigraph ColoredDigraph::raw() const { return RawDigraph{n_, m_, parts_, arcs_}; }

Digraph ColoredDigraph::uncolored() const {
  Digraph g(n_);
  for (const Arc& a : arcs_) g.add_arc(a.from, a.to);
  return g;
}

Digraph::Digraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "negative vertex count");
}

void Digraph::add_arc(Vertex u, Vertex v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw Error(ErrorKind::VertexOutOfRange, "arc " + pair_str(u, v));
  if (u == v) throw Error(ErrorKind::LoopArc, "arc " + pair_str(u, v));
  adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = 1;
}

void Digraph::remove_arc(Vertex u, Vertex v) {
  adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = 0;
}

std::size_t Digraph::arc_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1}));
}

VertexList Digraph::out_neighbors(Vertex u) const {
  VertexList out;
  for (Vertex v = 0; v < n_; ++v) {
    if (has_arc(u, v)) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (has_arc(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

StructureClass classify(const ColoredDigraph& d) {
  StructureClass sc;
  sc.r = d.r();
  sc.is_bipartite = sc.r == 2;
  bool semicomplete = true;
  bool any_symmetric = false;
  for (Vertex u = 0; u < d.n() && semicomplete; ++u) {
    for (Vertex v = u + 1; v < d.n(); ++v) {
      if (d.part_of(u) == d.part_of(v)) continue;
      const bool fwd = d.has_arc(u, v);
      const bool bwd = d.has_arc(v, u);
      if (!fwd && !bwd) {
        semicomplete = false;
        break;
      }
      any_symmetric = any_symmetric || (fwd && bwd);
    }
  }
  sc.is_semicomplete_multipartite = semicomplete && sc.r >= 2;
  sc.is_tournament = sc.is_semicomplete_multipartite && !any_symmetric;
  return sc;
}

ColoredDigraph asymmetric_subdigraph(const ColoredDigraph& d) {
  RawDigraph r = d.raw();
  std::erase_if(r.arcs, [&](const Arc& a) { return d.has_arc(a.to, a.from); });
  return build_digraph(std::move(r));
}

ColoredDigraph as_colored(const Digraph& g) {
  RawDigraph r;
  r.n = g.n();
  r.m = 1;
  for (Vertex v = 0; v < g.n(); ++v) r.parts.push_back({v});
  for (auto [u, v] : g.arcs()) r.arcs.push_back({u, v, 0});
  return build_digraph(std::move(r));
}

Json to_json(const ColoredDigraph& d) {
  Json j;
  j["n"] = d.n();
  j["m"] = d.m();
  j["parts"] = d.parts();
  Json arcs = Json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to, a.color});
  j["arcs"] = std::move(arcs);
  return j;
}

ColoredDigraph digraph_from_json(const Json& j) {
  RawDigraph r;
  try {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "digraph must be a JSON object");
    for (const char* key : {"n", "m", "parts", "arcs"}) {
      if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
    }
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.parts = j.at("parts").get<std::vector<VertexList>>();
    for (const Json& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 3) throw Error(ErrorKind::ParseError, "arc must be a [u, v, c] triple");
      r.arcs.push_back({a[0].get<Vertex>(), a[1].get<Vertex>(), a[2].get<Color>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return build_digraph(std::move(r));
}

std::string serialize(const ColoredDigraph& d) {
  std::ostringstream os;
  os << "{\n  \"n\": " << d.n() << ",\n  \"m\": " << d.m() << ",\n  \"parts\": [";
  for (std::size_t p = 0; p < d.parts().size(); ++p) {
    os << (p ? ", " : "") << '[';
    const auto& part = d.parts()[p];
    for (std::size_t i = 0; i < part.size(); ++i) os << (i ? ", " : "") << part[i];
    os << ']';
  }
  os << "],\n  \"arcs\": [";
  const auto& arcs = d.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    os << (i ? ",\n" : "\n") << "    [" << arcs[i].from << ", " << arcs[i].to << ", " << arcs[i].color << ']';
  }
  os << (arcs.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

ColoredDigraph parse_digraph(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return digraph_from_json(j);
}

ColoredDigraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

void save_digraph(const ColoredDigraph& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << serialize(d);
}

std::string format_vertex_set(std::span<const Vertex> vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

}  // namespace ck
