// Generators, words, and the length-lex well-order used to orient rewriting.

#ifndef LPA_ORDER_HPP_
#define LPA_ORDER_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lpa {

  enum class Kind : std::uint8_t { Vertex, Edge, Star };

  // A letter of the alphabet V u E u E*. For Kind::Star, id is the edge e of
  // the ghost edge e*.
  struct Generator {
    Kind          kind = Kind::Vertex;
    std::uint32_t id   = 0;

    static constexpr Generator vertex(VertexId v) {
      return {Kind::Vertex, v.value};
    }
    static constexpr Generator edge(EdgeId e) { return {Kind::Edge, e.value}; }
    static constexpr Generator star(EdgeId e) { return {Kind::Star, e.value}; }

    constexpr VertexId as_vertex() const { return VertexId(id); }
    constexpr EdgeId   as_edge() const { return EdgeId(id); }

    // v -> v, e -> e*, e* -> e
    constexpr Generator adjoint() const {
      switch (kind) {
        case Kind::Edge: return {Kind::Star, id};
        case Kind::Star: return {Kind::Edge, id};
        default: return *this;
      }
    }

    constexpr auto operator<=>(Generator const&) const = default;
  };

  // A word over the generators. Structural comparison (operator<=>) is only a
  // container key order; the algebraic order lives in OrderContext.
  struct Monomial {
    std::vector<Generator> letters;

    Monomial() = default;
    explicit Monomial(std::vector<Generator> ls) : letters(std::move(ls)) {}
    Monomial(std::initializer_list<Generator> ls) : letters(ls) {}

    std::size_t size() const noexcept { return letters.size(); }
    bool        empty() const noexcept { return letters.empty(); }

    Generator const& operator[](std::size_t i) const { return letters[i]; }

    Monomial operator*(Monomial const& that) const {
      Monomial out;
      out.letters.reserve(size() + that.size());
      out.letters.insert(out.letters.end(), letters.begin(), letters.end());
      out.letters.insert(
          out.letters.end(), that.letters.begin(), that.letters.end());
      return out;
    }

    // Letterwise adjoint of the reversed word.
    Monomial adjoint() const {
      Monomial out;
      out.letters.reserve(size());
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        out.letters.push_back(it->adjoint());
      }
      return out;
    }

    Monomial subword(std::size_t pos, std::size_t len) const {
      return Monomial(std::vector<Generator>(letters.begin() + pos,
                                             letters.begin() + pos + len));
    }

    auto operator<=>(Monomial const&) const = default;
    bool operator==(Monomial const&) const  = default;
  };

  inline Monomial path_word(std::vector<EdgeId> const& edges) {
    Monomial m;
    for (auto e : edges) {
      m.letters.push_back(Generator::edge(e));
    }
    return m;
  }

  // Rank of every generator under the well-order on X: all vertices, then all
  // edges, then all ghost edges. Edges are grouped by the rank of their
  // source, and within a source the special edge comes last.
  class OrderContext {
   public:
    OrderContext() = default;

    explicit OrderContext(Graph const& g)
        : _nvertices(g.vertex_count()), _nedges(g.edge_count()) {
      _vertex_rank.resize(_nvertices);
      for (std::size_t v = 0; v < _nvertices; ++v) {
        _vertex_rank[v] = static_cast<std::uint32_t>(v);
      }
      std::vector<EdgeId> order = g.edges();
      std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        auto sa = _vertex_rank[g.source(a).get()];
        auto sb = _vertex_rank[g.source(b).get()];
        if (sa != sb) {
          return sa < sb;
        }
        return !g.is_special(a) && g.is_special(b);
      });
      _edge_rank.resize(_nedges);
      for (std::size_t i = 0; i < order.size(); ++i) {
        _edge_rank[order[i].get()] = static_cast<std::uint32_t>(i);
      }
      _star_rank.resize(_nedges);
      for (std::size_t e = 0; e < _nedges; ++e) {
        _star_rank[e] = static_cast<std::uint32_t>(e);
      }
    }

    std::size_t alphabet_size() const noexcept {
      return _nvertices + 2 * _nedges;
    }

    // Position of x in the well-order on X, in [0, alphabet_size()).
    std::uint32_t rank(Generator x) const {
      switch (x.kind) {
        case Kind::Vertex: return _vertex_rank[x.id];
        case Kind::Edge:
          return static_cast<std::uint32_t>(_nvertices) + _edge_rank[x.id];
        case Kind::Star:
          return static_cast<std::uint32_t>(_nvertices + _nedges)
                 + _star_rank[x.id];
      }
      return 0;
    }

    // Inverse of rank.
    Generator generator(std::uint32_t r) const {
      if (r < _nvertices) {
        auto it = std::find(_vertex_rank.begin(), _vertex_rank.end(), r);
        return {Kind::Vertex,
                static_cast<std::uint32_t>(it - _vertex_rank.begin())};
      }
      if (r < _nvertices + _nedges) {
        auto it = std::find(
            _edge_rank.begin(), _edge_rank.end(), r - _nvertices);
        return {Kind::Edge,
                static_cast<std::uint32_t>(it - _edge_rank.begin())};
      }
      auto it = std::find(
          _star_rank.begin(), _star_rank.end(), r - _nvertices - _nedges);
      return {Kind::Star, static_cast<std::uint32_t>(it - _star_rank.begin())};
    }

    std::vector<std::uint32_t> const& vertex_rank() const noexcept {
      return _vertex_rank;
    }
    std::vector<std::uint32_t> const& edge_rank() const noexcept {
      return _edge_rank;
    }
    std::vector<std::uint32_t> const& star_rank() const noexcept {
      return _star_rank;
    }

    // Length-lex comparison.
    std::strong_ordering compare(Monomial const& a, Monomial const& b) const {
      if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (auto c = rank(a[i]) <=> rank(b[i]); c != 0) {
          return c;
        }
      }
      return std::strong_ordering::equal;
    }

    // Strict weak order functor for ordered containers.
    struct Less {
      OrderContext const* ctx;
      bool operator()(Monomial const& a, Monomial const& b) const {
        return ctx->compare(a, b) < 0;
      }
    };

    Less less() const { return Less{this}; }

   private:
    std::size_t                _nvertices = 0;
    std::size_t                _nedges    = 0;
    std::vector<std::uint32_t> _vertex_rank;
    std::vector<std::uint32_t> _edge_rank;
    std::vector<std::uint32_t> _star_rank;
  };

  inline OrderContext build_order(Graph const& g) { return OrderContext(g); }

  inline std::strong_ordering compare(Monomial const&     a,
                                      Monomial const&     b,
                                      OrderContext const& ctx) {
    return ctx.compare(a, b);
  }

  inline std::string to_string(Generator x, Graph const& g) {
    switch (x.kind) {
      case Kind::Vertex: return g.name(x.as_vertex());
      case Kind::Edge: return g.name(x.as_edge());
      case Kind::Star: return g.name(x.as_edge()) + "*";
    }
    return {};
  }

  // Letters joined by '.', the same syntax the expression parser reads.
  inline std::string to_string(Monomial const& m, Graph const& g) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != 0) {
        out += '.';
      }
      out += to_string(m[i], g);
    }
    return out;
  }

}  // namespace lpa

#endif  // LPA_ORDER_HPP_
