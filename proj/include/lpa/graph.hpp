// Finite directed multigraphs with a choice of special edge per non-sink.

#ifndef LPA_GRAPH_HPP_
#define LPA_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lpa {

  // Thrown for malformed or inconsistent graph descriptions. The message
  // always names the offending identifier.
  class GraphError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Dense index into a graph's vertex or edge table, in declaration order.
  template <typename Tag>
  struct Index {
    std::uint32_t value = 0;

    constexpr Index() = default;
    constexpr explicit Index(std::size_t v)
        : value(static_cast<std::uint32_t>(v)) {}

    constexpr std::size_t get() const noexcept { return value; }
    constexpr auto operator<=>(Index const&) const = default;
  };

  using VertexId = Index<struct VertexTag>;
  using EdgeId   = Index<struct EdgeTag>;

  struct EdgeSpec {
    std::string id;
    std::string src;
    std::string dst;
  };

  class Graph {
   public:
    Graph() = default;

    // Validates and builds a graph. `special` maps a vertex name to the name
    // of its special edge; vertices that emit edges but are missing from
    // `special` get the last declared edge they emit.
    static Graph make(std::vector<std::string> const&        vertices,
                      std::vector<EdgeSpec> const&           edges,
                      std::map<std::string, std::string> const& special = {}) {
      Graph g;
      for (auto const& name : vertices) {
        if (g._vertex_index.contains(name)) {
          throw GraphError("duplicate vertex identifier '" + name + "'");
        }
        g._vertex_index.emplace(name, VertexId(g._vertex_names.size()));
        g._vertex_names.push_back(name);
      }
      g._out.resize(vertices.size());
      g._in.resize(vertices.size());
      for (auto const& e : edges) {
        if (g._edge_index.contains(e.id)) {
          throw GraphError("duplicate edge identifier '" + e.id + "'");
        }
        if (g._vertex_index.contains(e.id)) {
          throw GraphError("identifier '" + e.id
                           + "' is used for both a vertex and an edge");
        }
        auto src = g.find_vertex(e.src);
        if (!src) {
          throw GraphError("undeclared vertex '" + e.src + "' (source of edge '"
                           + e.id + "')");
        }
        auto dst = g.find_vertex(e.dst);
        if (!dst) {
          throw GraphError("undeclared vertex '" + e.dst + "' (range of edge '"
                           + e.id + "')");
        }
        EdgeId id(g._edge_names.size());
        g._edge_index.emplace(e.id, id);
        g._edge_names.push_back(e.id);
        g._source.push_back(*src);
        g._range.push_back(*dst);
        g._out[src->get()].push_back(id);
        g._in[dst->get()].push_back(id);
      }

      g._special.assign(vertices.size(), std::nullopt);
      for (auto const& [vname, ename] : special) {
        auto v = g.find_vertex(vname);
        if (!v) {
          throw GraphError("undeclared vertex '" + vname
                           + "' in special edge map");
        }
        auto e = g.find_edge(ename);
        if (!e) {
          throw GraphError("undeclared edge '" + ename
                           + "' in special edge map (vertex '" + vname + "')");
        }
        if (g.is_sink(*v)) {
          throw GraphError("special edge defined on sink '" + vname + "'");
        }
        if (g.source(*e) != *v) {
          throw GraphError("special edge '" + ename + "' is not sourced at '"
                           + vname + "'");
        }
        g._special[v->get()] = *e;
      }
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (!g._special[v] && !g._out[v].empty()) {
          g._special[v] = g._out[v].back();
        }
      }
      return g;
    }

    std::size_t vertex_count() const noexcept { return _vertex_names.size(); }
    std::size_t edge_count() const noexcept { return _edge_names.size(); }

    std::string const& name(VertexId v) const { return _vertex_names[v.get()]; }
    std::string const& name(EdgeId e) const { return _edge_names[e.get()]; }

    VertexId source(EdgeId e) const { return _source[e.get()]; }
    VertexId range(EdgeId e) const { return _range[e.get()]; }

    std::span<EdgeId const> out_edges(VertexId v) const { return _out[v.get()]; }
    std::span<EdgeId const> in_edges(VertexId v) const { return _in[v.get()]; }

    bool is_sink(VertexId v) const { return _out[v.get()].empty(); }

    std::optional<EdgeId> special(VertexId v) const {
      return _special[v.get()];
    }

    bool is_special(EdgeId e) const { return _special[source(e).get()] == e; }

    std::optional<VertexId> find_vertex(std::string const& name) const {
      auto it = _vertex_index.find(name);
      if (it == _vertex_index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::optional<EdgeId> find_edge(std::string const& name) const {
      auto it = _edge_index.find(name);
      if (it == _edge_index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::vector<VertexId> vertices() const {
      std::vector<VertexId> out;
      for (std::size_t i = 0; i < vertex_count(); ++i) {
        out.emplace_back(i);
      }
      return out;
    }

    std::vector<EdgeId> edges() const {
      std::vector<EdgeId> out;
      for (std::size_t i = 0; i < edge_count(); ++i) {
        out.emplace_back(i);
      }
      return out;
    }

    std::vector<VertexId> sinks() const {
      std::vector<VertexId> out;
      for (auto v : vertices()) {
        if (is_sink(v)) {
          out.push_back(v);
        }
      }
      return out;
    }

    std::vector<EdgeSpec> edge_specs() const {
      std::vector<EdgeSpec> out;
      for (auto e : edges()) {
        out.push_back({name(e), name(source(e)), name(range(e))});
      }
      return out;
    }

    std::vector<std::string> const& vertex_names() const noexcept {
      return _vertex_names;
    }

    std::map<std::string, std::string> special_map() const {
      std::map<std::string, std::string> out;
      for (auto v : vertices()) {
        if (auto e = special(v)) {
          out.emplace(name(v), name(*e));
        }
      }
      return out;
    }

   private:
    std::vector<std::string>                  _vertex_names;
    std::vector<std::string>                  _edge_names;
    std::unordered_map<std::string, VertexId> _vertex_index;
    std::unordered_map<std::string, EdgeId>   _edge_index;
    std::vector<VertexId>                     _source;
    std::vector<VertexId>                     _range;
    std::vector<std::vector<EdgeId>>          _out;
    std::vector<std::vector<EdgeId>>          _in;
    std::vector<std::optional<EdgeId>>        _special;
  };

}  // namespace lpa

#endif  // LPA_GRAPH_HPP_
