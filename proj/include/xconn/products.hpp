#pragma once

#include <optional>
#include <string>
#include <utility>

#include "xconn/graph.hpp"

namespace xconn {

enum class ProductKind { strong, cartesian };

/// Selects a factor. A layer "along factor1" is a copy of G1 (fixed y);
/// along factor2 a copy of G2 (fixed x).
enum class Axis { factor1, factor2 };

std::string to_string(ProductKind kind);

/// Product graph with row-major pairing: (i, j) <-> i * n + j.
struct ProductGraph {
  Graph graph;
  Graph factor1;
  Graph factor2;
  ProductKind kind = ProductKind::strong;

  [[nodiscard]] std::size_t m() const { return factor1.vertex_count(); }
  [[nodiscard]] std::size_t n() const { return factor2.vertex_count(); }
  [[nodiscard]] Vertex id(Vertex i, Vertex j) const { return static_cast<Vertex>(i * n() + j); }
  [[nodiscard]] std::pair<Vertex, Vertex> coords(Vertex v) const {
    return {static_cast<Vertex>(v / n()), static_cast<Vertex>(v % n())};
  }
  /// "(x1,y2)" style rendering using the factor labels.
  [[nodiscard]] std::string coord_label(Vertex v) const;
};

ProductGraph strong_product(const Graph& g1, const Graph& g2);
ProductGraph cartesian_product(const Graph& g1, const Graph& g2);

/// Vertex set of the layer through `index`: for Axis::factor1 the G1-layer at
/// y = index, for Axis::factor2 the G2-layer at x = index.
VertexSet layer(const ProductGraph& pg, Axis axis, Vertex index);
VertexSet slice_of_set(const ProductGraph& pg, const VertexSet& s, Axis axis, Vertex index);

/// Projection of s onto factor 1 (axis factor1) or factor 2.
VertexSet project(const ProductGraph& pg, const VertexSet& s, Axis axis);

bool is_vertex_cut(const Graph& g, const VertexSet& s);

/// S x V2 (axis factor1) or V1 x S (axis factor2); the factor cut must
/// disconnect its factor.
CutSet make_i_set(const ProductGraph& pg, const VertexSet& factor_cut, Axis axis);

/// (S1 x A2) u (S1 x S2) u (A1 x S2) where Si cuts Gi and Ai is a component
/// of Gi - Si.
CutSet make_l_set(const ProductGraph& pg, const VertexSet& s1, const VertexSet& a1,
                  const VertexSet& s2, const VertexSet& a2);

enum class CutShape { i_set, l_set, neither };

std::string to_string(CutShape shape);

struct CutClassification {
  CutShape verdict = CutShape::neither;
  /// For i_set: the axis whose factor carries the cut.
  std::optional<Axis> axis;
  VertexSet s1, a1, s2, a2;

  /// Rebuilds the classified set from the certificate.
  [[nodiscard]] CutSet reconstruct(const ProductGraph& pg) const;
};

/// Throws std::invalid_argument if s does not disconnect pg.
CutClassification classify_cut(const ProductGraph& pg, const CutSet& s);

}  // namespace xconn
