#include "xconn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace xconn {

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex count) {
  std::vector<Vertex> ids(count);
  for (Vertex v = 0; v < count; ++v) ids[v] = v;
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edges(std::size_t vertex_count,
                        std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count)
    throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                " does not match vertex count " + std::to_string(vertex_count));
  Graph g;
  g.adjacency_.resize(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nb : g.adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.edge_count_ += nb.size();
  }
  g.edge_count_ /= 2;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(v);
}

void Graph::validate(const VertexSet& s) const {
  if (!s.empty() && s.vec().back() >= vertex_count())
    throw std::invalid_argument("vertex id " + std::to_string(s.vec().back()) +
                                " out of range for graph of order " +
                                std::to_string(vertex_count()));
}

Graph make_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path order must be at least 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    if (i + 1 < n) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle order must be at least 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph make_complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
  g.validate(a);
  std::vector<char> in_a(g.vertex_count(), 0);
  for (Vertex v : a) in_a[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v : a)
    for (Vertex w : g.neighbors(v))
      if (!in_a[w]) out.push_back(w);
  return VertexSet(std::move(out));
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  g.validate(removed);
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  // Scanning roots in id order yields the smallest-member ordering for free.
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a) {
  g.validate(a);
  std::vector<std::int64_t> local(g.vertex_count(), -1);
  InducedSubgraph out;
  out.original_id = a.vec();
  for (std::size_t i = 0; i < a.size(); ++i) local[a.vec()[i]] = static_cast<std::int64_t>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vertex v = a.vec()[i];
    if (!g.labels().empty()) labels.push_back(g.labels()[v]);
    for (Vertex w : g.neighbors(v))
      if (local[w] > static_cast<std::int64_t>(i))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
  }
  out.graph = Graph::from_edges(a.size(), edges, std::move(labels));
  return out;
}

std::size_t min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("min_degree of empty graph");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != n - 1) return false;
  return true;
}

}  // namespace xconn
