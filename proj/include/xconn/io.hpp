#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "xconn/extra_conn.hpp"
#include "xconn/graph.hpp"
#include "xconn/products.hpp"

namespace xconn {

struct ProductMeta {
  ProductKind kind = ProductKind::strong;
  std::size_t m = 0;
  std::size_t n = 0;
};

struct LoadedGraph {
  Graph graph;
  std::optional<ProductMeta> product;
};

/// {"n": int, "edges": [[u,v],...] with u<v, "labels"?: [str]}
nlohmann::json graph_to_json(const Graph& g);
/// Same as graph_to_json plus "product": {"kind", "m", "n"}.
nlohmann::json product_to_json(const ProductGraph& pg);
/// Throws std::invalid_argument on malformed documents.
LoadedGraph graph_from_json(const nlohmann::json& doc);

/// JSON integer list, or with labels [{"id": v, "label": "(x1,y1)"}, ...].
nlohmann::json cut_to_json(const Graph& g, const CutSet& cut, bool with_labels);
/// Accepts a bare integer list or {"cut": [...]}.
CutSet cut_from_json(const nlohmann::json& doc);

/// {g, value | "infinity", witness, witness_labels?, solver, stats?}
nlohmann::json result_to_json(const Graph& g, const ExtraConnResult& r, bool with_stats);

/// Undirected DOT; vertices in `highlight` are filled.
std::string to_dot(const Graph& g, const CutSet& highlight = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace xconn
