#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chromakernel/digraph.hpp"

namespace ck {

struct KernelResult {
  std::optional<VertexList> kernel;  // Found(K) when set, NoneExists otherwise
  bool exhaustive = false;
  std::uint64_t search_nodes = 0;

  bool found() const { return kernel.has_value(); }
  std::string describe() const;
};

struct KernelViolation {
  enum class Kind { Empty, NotIndependent, NotAbsorbed };
  Kind kind = Kind::Empty;
  Vertex from = -1;  // NotIndependent: from reaches to; NotAbsorbed: the stray vertex
  Vertex to = -1;
  std::string describe() const;
};

struct KernelCheck {
  bool ok = false;
  std::optional<KernelViolation> violation;
  explicit operator bool() const { return ok; }
};

struct KernelSolverOptions {
  int max_vertices = 24;  // at most 64
};

// Nonempty, no arc inside K, every outside vertex has an arc into K.
KernelCheck is_kernel(const Digraph& g, const VertexList& k);

// Lexicographically smallest kernel (sorted vertex lists compared
// element-wise), or an exhaustive NoneExists. Throws TooLarge above the cap.
KernelResult find_kernel(const Digraph& g, const KernelSolverOptions& options = {});

struct DuchetResult {
  bool holds = false;
  VertexList cycle;  // v0 .. vt v0 over asymmetric arcs when !holds
};

// Every directed cycle has a symmetric arc, i.e. the asymmetric arcs are acyclic.
DuchetResult duchet_condition(const Digraph& g);

// Kernel of the k-closure, re-certified directly on d.
KernelResult find_k_colored_kernel(const ColoredDigraph& d, int k, const KernelSolverOptions& options = {});

// No at-most-k-colored path between distinct members; every other vertex has
// one into K.
KernelCheck is_k_colored_kernel(const ColoredDigraph& d, const VertexList& k, int k_colors);

}  // namespace ck
