#include "xconn/products.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace xconn {

std::string to_string(ProductKind kind) {
  return kind == ProductKind::strong ? "strong" : "cartesian";
}

std::string to_string(CutShape shape) {
  switch (shape) {
    case CutShape::i_set: return "i_set";
    case CutShape::l_set: return "l_set";
    case CutShape::neither: break;
  }
  return "neither";
}

std::string ProductGraph::coord_label(Vertex v) const {
  auto [i, j] = coords(v);
  std::string y = factor2.label(j);
  // Factor labels are "x<k>"; the second coordinate reads better as "y<k>".
  if (!y.empty() && y.front() == 'x') y.front() = 'y';
  return "(" + factor1.label(i) + "," + y + ")";
}

namespace {

ProductGraph build_product(const Graph& g1, const Graph& g2, ProductKind kind) {
  if (g1.vertex_count() == 0 || g2.vertex_count() == 0)
    throw std::invalid_argument("product factors must be nonempty");
  ProductGraph pg;
  pg.factor1 = g1;
  pg.factor2 = g2;
  pg.kind = kind;
  const auto m = static_cast<Vertex>(g1.vertex_count());
  const auto n = static_cast<Vertex>(g2.vertex_count());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      const Vertex u = i * n + j;
      for (Vertex j2 : g2.neighbors(j)) edges.emplace_back(u, i * n + j2);
      for (Vertex i2 : g1.neighbors(i)) {
        edges.emplace_back(u, i2 * n + j);
        if (kind == ProductKind::strong)
          for (Vertex j2 : g2.neighbors(j)) edges.emplace_back(u, i2 * n + j2);
      }
    }
  }
  // Each edge was emitted from both endpoints; from_edges collapses duplicates.
  std::erase_if(edges, [](const auto& e) { return e.first > e.second; });
  std::vector<std::string> labels;
  for (Vertex v = 0; v < m * n; ++v) labels.push_back(pg.coord_label(v));
  pg.graph = Graph::from_edges(std::size_t{m} * n, edges, std::move(labels));
  return pg;
}

}  // namespace

ProductGraph strong_product(const Graph& g1, const Graph& g2) {
  return build_product(g1, g2, ProductKind::strong);
}

ProductGraph cartesian_product(const Graph& g1, const Graph& g2) {
  return build_product(g1, g2, ProductKind::cartesian);
}

VertexSet layer(const ProductGraph& pg, Axis axis, Vertex index) {
  std::vector<Vertex> out;
  if (axis == Axis::factor1) {
    if (index >= pg.n()) throw std::invalid_argument("G1-layer index out of range");
    for (Vertex i = 0; i < pg.m(); ++i) out.push_back(pg.id(i, index));
  } else {
    if (index >= pg.m()) throw std::invalid_argument("G2-layer index out of range");
    for (Vertex j = 0; j < pg.n(); ++j) out.push_back(pg.id(index, j));
  }
  return VertexSet(std::move(out));
}

VertexSet slice_of_set(const ProductGraph& pg, const VertexSet& s, Axis axis, Vertex index) {
  pg.graph.validate(s);
  const VertexSet l = layer(pg, axis, index);
  std::vector<Vertex> out;
  std::set_intersection(s.begin(), s.end(), l.begin(), l.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet project(const ProductGraph& pg, const VertexSet& s, Axis axis) {
  pg.graph.validate(s);
  std::vector<Vertex> out;
  for (Vertex v : s) {
    auto [i, j] = pg.coords(v);
    out.push_back(axis == Axis::factor1 ? i : j);
  }
  return VertexSet(std::move(out));
}

bool is_vertex_cut(const Graph& g, const VertexSet& s) {
  return components(g, s).size() >= 2;
}

namespace {

std::vector<Vertex> cross(const ProductGraph& pg, const VertexSet& xs, const VertexSet& ys) {
  std::vector<Vertex> out;
  for (Vertex i : xs)
    for (Vertex j : ys) out.push_back(pg.id(i, j));
  return out;
}

bool is_component_of(const Graph& g, const VertexSet& cut, const VertexSet& a) {
  const auto comps = components(g, cut);
  return std::find(comps.begin(), comps.end(), a) != comps.end();
}

void require_cut_and_component(const Graph& g, const VertexSet& s, const VertexSet& a,
                               const char* which) {
  g.validate(s);
  g.validate(a);
  if (!is_vertex_cut(g, s))
    throw std::invalid_argument(std::string(which) + ": set is not a vertex cut of its factor");
  if (!is_component_of(g, s, a))
    throw std::invalid_argument(std::string(which) +
                                ": set is not a component of the factor minus its cut");
}

}  // namespace

CutSet make_i_set(const ProductGraph& pg, const VertexSet& factor_cut, Axis axis) {
  const Graph& factor = axis == Axis::factor1 ? pg.factor1 : pg.factor2;
  factor.validate(factor_cut);
  if (!is_vertex_cut(factor, factor_cut))
    throw std::invalid_argument(std::string(axis == Axis::factor1 ? "factor 1" : "factor 2") +
                                ": set is not a vertex cut of its factor");
  if (axis == Axis::factor1)
    return CutSet(cross(pg, factor_cut, VertexSet::range(static_cast<Vertex>(pg.n()))));
  return CutSet(cross(pg, VertexSet::range(static_cast<Vertex>(pg.m())), factor_cut));
}

CutSet make_l_set(const ProductGraph& pg, const VertexSet& s1, const VertexSet& a1,
                  const VertexSet& s2, const VertexSet& a2) {
  require_cut_and_component(pg.factor1, s1, a1, "factor 1");
  require_cut_and_component(pg.factor2, s2, a2, "factor 2");
  auto out = cross(pg, s1, a2);
  auto part = cross(pg, s1, s2);
  out.insert(out.end(), part.begin(), part.end());
  part = cross(pg, a1, s2);
  out.insert(out.end(), part.begin(), part.end());
  return CutSet(std::move(out));
}

CutSet CutClassification::reconstruct(const ProductGraph& pg) const {
  switch (verdict) {
    case CutShape::i_set:
      return *axis == Axis::factor1 ? make_i_set(pg, s1, Axis::factor1)
                                    : make_i_set(pg, s2, Axis::factor2);
    case CutShape::l_set:
      return make_l_set(pg, s1, a1, s2, a2);
    case CutShape::neither: break;
  }
  return {};
}

namespace {

struct FactorSplit {
  VertexSet cut;
  VertexSet component;
};

// Every split of `support` into (cut, component) with cut disconnecting the
// factor and component a full component of factor - cut. Ordered by the
// bitmask of the cut over `support`.
std::vector<FactorSplit> factor_splits(const Graph& factor, const VertexSet& support) {
  if (support.size() > 24)
    throw std::invalid_argument("factor projection too large for L-set classification");
  std::vector<FactorSplit> out;
  const auto& ids = support.vec();
  const std::uint32_t full = (1u << ids.size()) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<Vertex> cut, rest;
    for (std::size_t b = 0; b < ids.size(); ++b) ((mask >> b) & 1u ? cut : rest).push_back(ids[b]);
    VertexSet c(std::move(cut)), a(std::move(rest));
    if (!is_vertex_cut(factor, c)) continue;
    if (!is_component_of(factor, c, a)) continue;
    out.push_back({std::move(c), std::move(a)});
  }
  return out;
}

}  // namespace

CutClassification classify_cut(const ProductGraph& pg, const CutSet& s) {
  pg.graph.validate(s);
  if (!is_vertex_cut(pg.graph, s)) throw std::invalid_argument("set is not a vertex cut");

  const VertexSet p1 = project(pg, s, Axis::factor1);
  const VertexSet p2 = project(pg, s, Axis::factor2);
  CutClassification out;

  if (is_vertex_cut(pg.factor1, p1) &&
      s == CutSet(cross(pg, p1, VertexSet::range(static_cast<Vertex>(pg.n()))))) {
    out.verdict = CutShape::i_set;
    out.axis = Axis::factor1;
    out.s1 = p1;
    return out;
  }
  if (is_vertex_cut(pg.factor2, p2) &&
      s == CutSet(cross(pg, VertexSet::range(static_cast<Vertex>(pg.m())), p2))) {
    out.verdict = CutShape::i_set;
    out.axis = Axis::factor2;
    out.s2 = p2;
    return out;
  }

  // An L-set projects onto S1 u A1 and S2 u A2, so both splits are drawn
  // from the projections.
  const auto splits1 = factor_splits(pg.factor1, p1);
  if (splits1.empty()) return out;
  const auto splits2 = factor_splits(pg.factor2, p2);
  for (const auto& f1 : splits1) {
    for (const auto& f2 : splits2) {
      if (make_l_set(pg, f1.cut, f1.component, f2.cut, f2.component) == s) {
        out.verdict = CutShape::l_set;
        out.s1 = f1.cut;
        out.a1 = f1.component;
        out.s2 = f2.cut;
        out.a2 = f2.component;
        return out;
      }
    }
  }
  return out;
}

}  // namespace xconn
