#include "chromakernel/kernel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "chromakernel/chroma_paths.hpp"
#include "chromakernel/error.hpp"

namespace ck {

std::string KernelResult::describe() const {
  if (kernel) return "Found(" + format_vertex_set(*kernel) + ")";
  return std::string("NoneExists(") + (exhaustive ? "exhaustive" : "partial") +
         ", nodes=" + std::to_string(search_nodes) + ")";
}

std::string KernelViolation::describe() const {
  switch (kind) {
    case Kind::Empty: return "empty set";
    case Kind::NotIndependent:
      return "not independent: " + std::to_string(from) + " reaches " + std::to_string(to);
    case Kind::NotAbsorbed: return "vertex " + std::to_string(from) + " not absorbed";
  }
  return "?";
}

namespace {

VertexList normalized(const VertexList& k, int n) {
  VertexList s = k;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  return s;
}

// Reachability predicate shared by the plain and the colored check.
template <typename Reaches>
KernelCheck check_kernel(int n, const VertexList& raw, Reaches reaches) {
  const VertexList k = normalized(raw, n);
  if (k.empty()) return {false, KernelViolation{KernelViolation::Kind::Empty}};
  for (Vertex u : k) {
    for (Vertex v : k) {
      if (u != v && reaches(u, v)) return {false, KernelViolation{KernelViolation::Kind::NotIndependent, u, v}};
    }
  }
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : k) in[static_cast<std::size_t>(v)] = 1;
  for (Vertex u = 0; u < n; ++u) {
    if (in[static_cast<std::size_t>(u)]) continue;
    const bool absorbed = std::any_of(k.begin(), k.end(), [&](Vertex v) { return reaches(u, v); });
    if (!absorbed) return {false, KernelViolation{KernelViolation::Kind::NotAbsorbed, u}};
  }
  return {true, std::nullopt};
}

using Mask = std::uint64_t;

// Backtracking over vertices in ascending order, In before Out, so the first
// complete assignment is the lexicographically smallest kernel. A vertex
// adjacent (either direction) to an In vertex is forced Out; a branch dies as
// soon as some Out vertex has no remaining potential absorber.
class KernelSearch {
 public:
  explicit KernelSearch(const Digraph& g) : n_(g.n()), out_(static_cast<std::size_t>(n_)), adj_(static_cast<std::size_t>(n_)) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (!g.has_arc(u, v)) continue;
        out_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
      }
    }
  }

  KernelResult run() {
    KernelResult result;
    if (n_ > 0 && solve(0, 0, 0, 0)) {
      VertexList k;
      for (Vertex v = 0; v < n_; ++v) {
        if (best_ & bit(v)) k.push_back(v);
      }
      result.kernel = std::move(k);
    }
    result.exhaustive = !result.kernel.has_value();
    result.search_nodes = nodes_;
    return result;
  }

 private:
  static Mask bit(Vertex v) { return Mask{1} << v; }

  bool feasible(Vertex next, Mask in, Mask out, Mask blocked) const {
    const Mask undecided = next >= 64 ? 0 : (~Mask{0} << next) & full();
    const Mask may_absorb = in | (undecided & ~blocked);
    for (Mask rest = out; rest != 0; rest &= rest - 1) {
      const int o = std::countr_zero(rest);
      if ((out_[static_cast<std::size_t>(o)] & may_absorb) == 0) return false;
    }
    return true;
  }

  Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  bool solve(Vertex v, Mask in, Mask out, Mask blocked) {
    ++nodes_;
    if (!feasible(v, in, out, blocked)) return false;
    if (v == n_) {
      if (in == 0) return false;
      best_ = in;
      return true;
    }
    if ((blocked & bit(v)) == 0) {
      if (solve(v + 1, in | bit(v), out, blocked | adj_[static_cast<std::size_t>(v)])) return true;
    }
    return solve(v + 1, in, out | bit(v), blocked);
  }

  int n_;
  std::vector<Mask> out_;
  std::vector<Mask> adj_;
  Mask best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

KernelCheck is_kernel(const Digraph& g, const VertexList& k) {
  return check_kernel(g.n(), k, [&](Vertex u, Vertex v) { return g.has_arc(u, v); });
}

KernelResult find_kernel(const Digraph& g, const KernelSolverOptions& options) {
  if (options.max_vertices > 64 || options.max_vertices < 1) {
    throw Error(ErrorKind::InvalidParams, "kernel solver cap must be in 1..64");
  }
  if (g.n() > options.max_vertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.n()) + " vertices exceed the cap of " +
                                         std::to_string(options.max_vertices));
  }
  return KernelSearch(g).run();
}

DuchetResult duchet_condition(const Digraph& g) {
  const int n = g.n();
  auto asym = [&](Vertex u, Vertex v) { return g.has_arc(u, v) && !g.has_arc(v, u); };
  enum : char { kWhite, kGray, kBlack };
  std::vector<char> state(static_cast<std::size_t>(n), kWhite);
  // Explicit stack of (vertex, next neighbor to try); doubles as the DFS path.
  std::vector<std::pair<Vertex, Vertex>> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (state[static_cast<std::size_t>(root)] != kWhite) continue;
    stack.emplace_back(root, 0);
    state[static_cast<std::size_t>(root)] = kGray;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == n) {
        state[static_cast<std::size_t>(u)] = kBlack;
        stack.pop_back();
        continue;
      }
      const Vertex v = next++;
      if (!asym(u, v)) continue;
      if (state[static_cast<std::size_t>(v)] == kGray) {
        DuchetResult r;
        auto it = std::find_if(stack.begin(), stack.end(), [v](const auto& e) { return e.first == v; });
        for (; it != stack.end(); ++it) r.cycle.push_back(it->first);
        r.cycle.push_back(v);
        return r;
      }
      if (state[static_cast<std::size_t>(v)] == kWhite) {
        state[static_cast<std::size_t>(v)] = kGray;
        stack.emplace_back(v, 0);
      }
    }
  }
  return DuchetResult{true, {}};
}

KernelCheck is_k_colored_kernel(const ColoredDigraph& d, const VertexList& k, int k_colors) {
  if (k_colors < 1) throw Error(ErrorKind::InvalidParams, "k must be at least 1");
  return check_kernel(d.n(), k, [&](Vertex u, Vertex v) { return min_colors_path(d, u, v, k_colors).has_value(); });
}

KernelResult find_k_colored_kernel(const ColoredDigraph& d, int k, const KernelSolverOptions& options) {
  if (d.n() > options.max_vertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(d.n()) + " vertices exceed the cap of " +
                                         std::to_string(options.max_vertices));
  }
  KernelResult result = find_kernel(k_closure(d, k), options);
  if (result.kernel && !is_k_colored_kernel(d, *result.kernel, k)) {
    throw std::logic_error("closure kernel " + format_vertex_set(*result.kernel) +
                           " is not a k-colored kernel of the digraph");
  }
  return result;
}

}  // namespace ck
