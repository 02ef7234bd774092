#include "chromakernel/certify.hpp"

#include <cstdint>
#include <vector>

#include "chromakernel/error.hpp"

namespace ck::certify {

namespace {

void extend(const ColoredDigraph& d, Vertex source, Vertex at, ColorSet used, int k, std::vector<char>& on_path,
            Digraph& out) {
  for (const OutArc& a : d.out(at)) {
    if (on_path[static_cast<std::size_t>(a.to)]) continue;
    const ColorSet next = used.with(a.color);
    if (next.size() > k) continue;
    out.add_arc(source, a.to);
    on_path[static_cast<std::size_t>(a.to)] = 1;
    extend(d, source, a.to, next, k, on_path, out);
    on_path[static_cast<std::size_t>(a.to)] = 0;
  }
}

void check_size(int n) {
  if (n > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, "oracle handles at most " + std::to_string(kMaxVertices) + " vertices");
  }
}

}  // namespace

Digraph closure_by_simple_paths(const ColoredDigraph& d, int k) {
  check_size(d.n());
  Digraph out(d.n());
  std::vector<char> on_path(static_cast<std::size_t>(d.n()), 0);
  for (Vertex s = 0; s < d.n(); ++s) {
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(d, s, s, ColorSet{}, k, on_path, out);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return out;
}

std::optional<VertexList> kernel_by_subsets(const Digraph& g) {
  const int n = g.n();
  check_size(n);
  std::optional<VertexList> best;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    auto in = [mask](Vertex v) { return (mask >> v) & 1U; };
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      if (in(u)) {
        for (Vertex v = 0; v < n && ok; ++v) ok = !(in(v) && g.has_arc(u, v));
      } else {
        bool absorbed = false;
        for (Vertex v = 0; v < n && !absorbed; ++v) absorbed = in(v) && g.has_arc(u, v);
        ok = absorbed;
      }
    }
    if (!ok) continue;
    VertexList k;
    for (Vertex v = 0; v < n; ++v) {
      if (in(v)) k.push_back(v);
    }
    if (!best || k < *best) best = std::move(k);
  }
  return best;
}

OracleVerdict k_colored_kernel_oracle(const ColoredDigraph& d, int k) {
  OracleVerdict v;
  v.kernel = kernel_by_subsets(closure_by_simple_paths(d, k));
  v.kernel_exists = v.kernel.has_value();
  return v;
}

}  // namespace ck::certify
