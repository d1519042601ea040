#include "xconn/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xconn {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json doc;
  doc["n"] = g.vertex_count();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (!g.labels().empty()) doc["labels"] = g.labels();
  return doc;
}

json product_to_json(const ProductGraph& pg) {
  json doc = graph_to_json(pg.graph);
  doc["product"] = {{"kind", to_string(pg.kind)}, {"m", pg.m()}, {"n", pg.n()}};
  return doc;
}

LoadedGraph graph_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw std::invalid_argument("graph document must be an object");
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
    LoadedGraph out{Graph::from_edges(n, edges, std::move(labels)), std::nullopt};
    if (doc.contains("product")) {
      const auto& p = doc["product"];
      ProductMeta meta;
      const auto kind = p.at("kind").get<std::string>();
      if (kind == "strong")
        meta.kind = ProductKind::strong;
      else if (kind == "cartesian")
        meta.kind = ProductKind::cartesian;
      else
        throw std::invalid_argument("unknown product kind '" + kind + "'");
      meta.m = p.at("m").get<std::size_t>();
      meta.n = p.at("n").get<std::size_t>();
      if (meta.m * meta.n != n) throw std::invalid_argument("product metadata does not match n");
      out.product = meta;
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

json cut_to_json(const Graph& g, const CutSet& cut, bool with_labels) {
  json out = json::array();
  for (Vertex v : cut) {
    if (with_labels)
      out.push_back({{"id", v}, {"label", g.label(v)}});
    else
      out.push_back(v);
  }
  return out;
}

CutSet cut_from_json(const json& doc) {
  try {
    const json& list = doc.is_object() ? doc.at("cut") : doc;
    std::vector<Vertex> ids;
    for (const auto& item : list)
      ids.push_back(item.is_object() ? item.at("id").get<Vertex>() : item.get<Vertex>());
    return CutSet(std::move(ids));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed cut JSON: ") + e.what());
  }
}

json result_to_json(const Graph& g, const ExtraConnResult& r, bool with_stats) {
  json doc;
  doc["g"] = r.g;
  if (r.value)
    doc["value"] = *r.value;
  else
    doc["value"] = "infinity";
  doc["witness"] = r.witness ? cut_to_json(g, *r.witness, false) : json::array();
  if (r.witness && !g.labels().empty()) {
    json labels = json::array();
    for (Vertex v : *r.witness) labels.push_back(g.label(v));
    doc["witness_labels"] = std::move(labels);
  }
  doc["solver"] = to_string(r.solver);
  if (with_stats) doc["stats"] = {{"nodes", r.stats.nodes}, {"elapsed_ms", r.stats.elapsed_ms}};
  return doc;
}

std::string to_dot(const Graph& g, const CutSet& highlight) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << "\"";
    if (highlight.contains(v)) out << ", style=filled, fillcolor=tomato";
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

}  // namespace xconn
