#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace xconn {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(Vertex count);

  [[nodiscard]] std::span<const Vertex> members() const { return members_; }
  [[nodiscard]] const std::vector<Vertex>& vec() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

using CutSet = VertexSet;

/// Immutable undirected simple graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Rejects loops and out-of-range ids; duplicate
  /// edges collapse.
  static Graph from_edges(std::size_t vertex_count,
                          std::span<const std::pair<Vertex, Vertex>> edges,
                          std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t vertex_count() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, ordered lexicographically.
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  /// Label of v, or its decimal id when the graph carries no labels.
  [[nodiscard]] std::string label(Vertex v) const;

  /// Throws std::invalid_argument when any id in s is out of range.
  void validate(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Path on n vertices, labelled x1..xn.
Graph make_path(std::size_t n);
/// Cycle on n >= 3 vertices, labelled x0..x(n-1).
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);

VertexSet neighborhood(const Graph& g, const VertexSet& a);

/// Connected components of g - removed, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original_id[i] is the id in the parent graph of vertex i.
  std::vector<Vertex> original_id;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a);

std::size_t min_degree(const Graph& g);
bool is_complete(const Graph& g);

}  // namespace xconn
