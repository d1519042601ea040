#pragma once

// Internal 64-bit mask representation used by the exact solvers.

#include <bit>
#include <cstdint>
#include <vector>

#include "xconn/graph.hpp"

namespace xconn::detail {

using Mask = std::uint64_t;

inline Mask bit(unsigned v) { return Mask{1} << v; }
inline unsigned lowest(Mask m) { return static_cast<unsigned>(std::countr_zero(m)); }
inline std::size_t count(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

struct BitGraph {
  std::size_t n = 0;
  Mask all = 0;
  std::vector<Mask> adj;

  explicit BitGraph(const Graph& g) : n(g.vertex_count()), adj(g.vertex_count(), 0) {
    all = n == 64 ? ~Mask{0} : bit(static_cast<unsigned>(n)) - 1;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
  }

  [[nodiscard]] Mask neighbors_of(Mask set) const {
    Mask out = 0;
    for (Mask s = set; s; s &= s - 1) out |= adj[lowest(s)];
    return out & ~set;
  }

  /// Component of `start` inside the induced subgraph on `alive`.
  [[nodiscard]] Mask component(Mask alive, unsigned start) const {
    Mask comp = bit(start);
    Mask frontier = comp;
    while (frontier) {
      Mask grown = neighbors_of(frontier) & alive & ~comp;
      comp |= grown;
      frontier = grown;
    }
    return comp;
  }
};

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

inline VertexSet from_mask(Mask m) {
  std::vector<Vertex> ids;
  ids.reserve(count(m));
  for (; m; m &= m - 1) ids.push_back(lowest(m));
  return VertexSet(std::move(ids));
}

/// Lexicographic order of the sorted id lists of two equal-size sets.
inline bool lex_less_same_size(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (!diff) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

}  // namespace xconn::detail
