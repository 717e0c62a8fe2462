#pragma once

// Graph export. Output depends only on the graph, so it is byte-stable.
//
// DOT:
//   graph "NAME" {
//     v0 [label="(0,1)"];
//     v0 -- v1;
//   }
//
// JSON:
//   { "name": str,
//     "vertices": [ { "index", "idempotent", "unit": int, "label": str } ],
//     "edges": [ [u, v] ] }            u < v, lexicographic
// "idempotent" and "unit" are element indices of the ring tables.

#include <ostream>
#include <string>

#include <json.hpp>

#include "cleansr/clean_graph.hpp"
#include "cleansr/ring.hpp"

namespace cleansr {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline void write_dot(std::ostream& os, const FiniteRing& r, const CleanGraph& g, const std::string& name) {
  os << "graph " << dot_quote(name) << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "  v" << v << " [label=" << dot_quote(vertex_name(r, g.label(v))) << "];\n";
  for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
}

inline nlohmann::ordered_json graph_json(const FiniteRing& r, const CleanGraph& g, const std::string& name) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    nlohmann::ordered_json vj;
    vj["index"] = v;
    vj["idempotent"] = g.label(v).idempotent.index;
    vj["unit"] = g.label(v).unit.index;
    vj["label"] = vertex_name(r, g.label(v));
    j["vertices"].push_back(std::move(vj));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

inline void write_graph_json(std::ostream& os, const FiniteRing& r, const CleanGraph& g, const std::string& name) {
  os << graph_json(r, g, name).dump(2) << '\n';
}

}  // namespace cleansr
