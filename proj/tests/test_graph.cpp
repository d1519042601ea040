#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "xconn/graph.hpp"

using namespace xconn;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  return out;
}

void require_simple(const Graph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nb = g.neighbors(u);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
    for (Vertex v : nb) {
      CHECK(v != u);
      CHECK(v < g.vertex_count());
      CHECK(g.adjacent(v, u));
    }
  }
}

}  // namespace

TEST_CASE("paths") {
  CHECK(make_path(1).vertex_count() == 1);
  CHECK(make_path(1).edge_count() == 0);
  CHECK(make_path(2).edge_count() == 1);
  const Graph p5 = make_path(5);
  CHECK(p5.edge_count() == 4);
  CHECK(degrees(p5) == std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK(p5.label(0) == "x1");
  CHECK(p5.label(4) == "x5");
  CHECK_THROWS_AS(make_path(0), std::invalid_argument);
}

TEST_CASE("cycles") {
  for (std::size_t n : {3u, 4u, 6u}) {
    const Graph c = make_cycle(n);
    CHECK(c.edge_count() == n);
    for (auto d : degrees(c)) CHECK(d == 2);
  }
  CHECK(make_cycle(4).label(0) == "x0");
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(make_cycle(0), std::invalid_argument);
}

TEST_CASE("generated families are simple graphs") {
  for (std::size_t n = 1; n <= 8; ++n) require_simple(make_path(n));
  for (std::size_t n = 3; n <= 8; ++n) require_simple(make_cycle(n));
  for (std::size_t n = 1; n <= 6; ++n) require_simple(make_complete(n));
}

TEST_CASE("from_edges rejects loops and bad ids") {
  std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
  std::vector<std::pair<Vertex, Vertex>> far{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, far), std::invalid_argument);
  std::vector<std::pair<Vertex, Vertex>> dup{{0, 1}, {1, 0}, {0, 1}};
  CHECK(Graph::from_edges(2, dup).edge_count() == 1);
}

TEST_CASE("neighborhood") {
  const Graph p5 = make_path(5);
  CHECK(neighborhood(p5, {2}) == VertexSet{1, 3});
  CHECK(neighborhood(p5, {0, 1, 2, 3, 4}).empty());
  CHECK(neighborhood(make_cycle(4), {0}) == VertexSet{1, 3});
  CHECK_THROWS_AS(neighborhood(p5, {7}), std::invalid_argument);
}

TEST_CASE("components") {
  const Graph p5 = make_path(5);
  CHECK(components(p5, {2}) == std::vector<VertexSet>{{0, 1}, {3, 4}});
  CHECK(components(p5, {}) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
  CHECK(components(make_cycle(4), {0, 2}) == std::vector<VertexSet>{{1}, {3}});
  CHECK(components(p5, {0, 1, 2, 3, 4}).empty());
  CHECK(is_connected(p5));
}

TEST_CASE("induced subgraph") {
  const auto sub = induced_subgraph(make_cycle(4), {0, 1, 2});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edge_count() == 2);
  CHECK(degrees(sub.graph) == std::vector<std::size_t>{1, 2, 1});
  CHECK(sub.original_id == std::vector<Vertex>{0, 1, 2});

  const Graph p5 = make_path(5);
  const auto same = induced_subgraph(p5, VertexSet::range(5));
  CHECK(same.graph == p5);
  const auto independent = induced_subgraph(p5, {0, 2, 4});
  CHECK(independent.graph.vertex_count() == 3);
  CHECK(independent.graph.edge_count() == 0);
  CHECK(independent.graph.label(1) == "x3");
}

TEST_CASE("degree queries") {
  CHECK(is_complete(make_complete(4)));
  CHECK(min_degree(make_complete(4)) == 3);
  CHECK_FALSE(is_complete(make_cycle(4)));
  CHECK(min_degree(make_cycle(4)) == 2);
  CHECK(min_degree(make_path(5)) == 1);
  CHECK(is_complete(make_path(1)));
}

TEST_CASE("random graph properties") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = oracle::random_connected(rng, n, 0.2);
    require_simple(g);
    CHECK(components(g).size() == 1);

    std::vector<Vertex> picked;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) picked.push_back(v);
    const VertexSet a(picked);

    std::size_t total = 0;
    for (const auto& c : components(g, a)) total += c.size();
    CHECK(total == n - a.size());

    for (Vertex v : neighborhood(g, a)) CHECK_FALSE(a.contains(v));

    const auto sub = induced_subgraph(g, a);
    for (Vertex i = 0; i < a.size(); ++i)
      for (Vertex j = 0; j < a.size(); ++j)
        if (i != j) CHECK(sub.graph.adjacent(i, j) == g.adjacent(a.vec()[i], a.vec()[j]));
  }
}
