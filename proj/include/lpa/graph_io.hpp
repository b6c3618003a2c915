// JSON graph documents:
//
//   { "vertices": ["v", "w"],
//     "edges": [ {"id": "e", "src": "v", "dst": "v"},
//                {"id": "f", "src": "v", "dst": "w"} ],
//     "special": {"v": "e"} }
//
// "special" is optional, per vertex.

#ifndef LPA_GRAPH_IO_HPP_
#define LPA_GRAPH_IO_HPP_

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "graph.hpp"

namespace lpa {

  namespace detail {
    inline std::string const& require_string(nlohmann::json const& j,
                                             std::string const&    what) {
      if (!j.is_string()) {
        throw GraphError("malformed graph document: " + what
                         + " must be a string");
      }
      return j.get_ref<std::string const&>();
    }
  }  // namespace detail

  inline Graph parse_graph(std::string const& text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw GraphError(std::string("malformed graph document: ") + e.what());
    }
    if (!doc.is_object()) {
      throw GraphError("malformed graph document: top level must be an object");
    }
    for (auto const& [key, value] : doc.items()) {
      if (key != "vertices" && key != "edges" && key != "special") {
        throw GraphError("malformed graph document: unknown key '" + key + "'");
      }
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
      throw GraphError("malformed graph document: 'vertices' must be an array");
    }
    std::vector<std::string> vertices;
    for (auto const& v : doc["vertices"]) {
      vertices.push_back(detail::require_string(v, "vertex identifier"));
    }

    std::vector<EdgeSpec> edges;
    if (doc.contains("edges")) {
      if (!doc["edges"].is_array()) {
        throw GraphError("malformed graph document: 'edges' must be an array");
      }
      for (auto const& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("id") || !e.contains("src")
            || !e.contains("dst") || e.size() != 3) {
          throw GraphError("malformed graph document: each edge must be an "
                           "object with exactly 'id', 'src' and 'dst'");
        }
        edges.push_back({detail::require_string(e["id"], "edge 'id'"),
                         detail::require_string(e["src"], "edge 'src'"),
                         detail::require_string(e["dst"], "edge 'dst'")});
      }
    }

    std::map<std::string, std::string> special;
    if (doc.contains("special")) {
      if (!doc["special"].is_object()) {
        throw GraphError(
            "malformed graph document: 'special' must be an object");
      }
      for (auto const& [v, e] : doc["special"].items()) {
        special.emplace(v, detail::require_string(e, "special edge of '" + v
                                                         + "'"));
      }
    }
    return Graph::make(vertices, edges, special);
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw GraphError("cannot open graph file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  inline Graph load_graph(std::string const& path) {
    return parse_graph(read_file(path));
  }

  // Serialises g with its resolved special edges.
  inline nlohmann::ordered_json to_json(Graph const& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertex_names();
    j["edges"]    = nlohmann::ordered_json::array();
    for (auto const& e : g.edge_specs()) {
      j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
    }
    j["special"] = nlohmann::ordered_json::object();
    for (auto const& [v, e] : g.special_map()) {
      j["special"][v] = e;
    }
    return j;
  }

}  // namespace lpa

#endif  // LPA_GRAPH_IO_HPP_
