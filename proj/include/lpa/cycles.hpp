// Cycle structure of a finite graph: simple cycles, strongly connected
// components, exits and chains of cycles.

#ifndef LPA_CYCLES_HPP_
#define LPA_CYCLES_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace lpa {

  // A simple cycle, rotated so that vertices.front() is its smallest vertex.
  // edges[i] runs from vertices[i] to vertices[(i + 1) % length()].
  struct Cycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId>   edges;
    // base_paths[k] is the closed edge word starting at vertices[k].
    std::vector<std::vector<EdgeId>> base_paths;

    std::size_t length() const noexcept { return vertices.size(); }

    bool contains(VertexId v) const {
      return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    bool contains(EdgeId e) const {
      return std::find(edges.begin(), edges.end(), e) != edges.end();
    }

    // The closed edge word starting at v, if v is on the cycle.
    std::optional<std::vector<EdgeId>> based_at(VertexId v) const {
      for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (vertices[k] == v) {
          return base_paths[k];
        }
      }
      return std::nullopt;
    }

    auto operator<=>(Cycle const& that) const {
      if (auto c = vertices <=> that.vertices; c != 0) {
        return c;
      }
      return edges <=> that.edges;
    }
    bool operator==(Cycle const& that) const = default;
  };

  struct ChainStats {
    std::size_t        d1 = 0;
    std::size_t        d2 = 0;
    std::vector<Cycle> witness_chain_d1;
    std::vector<Cycle> witness_chain_d2;
  };

  namespace detail {
    inline Cycle make_cycle(std::vector<VertexId> vs, std::vector<EdgeId> es) {
      Cycle c;
      c.vertices = std::move(vs);
      c.edges    = std::move(es);
      auto const m = c.edges.size();
      for (std::size_t k = 0; k < m; ++k) {
        std::vector<EdgeId> rot;
        rot.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
          rot.push_back(c.edges[(k + i) % m]);
        }
        c.base_paths.push_back(std::move(rot));
      }
      return c;
    }
  }  // namespace detail

  // All simple cycles, each once, starting at its smallest vertex and sorted.
  // Parallel edges give distinct cycles.
  inline std::vector<Cycle> find_cycles(Graph const& g) {
    std::vector<Cycle>    result;
    std::vector<VertexId> vpath;
    std::vector<EdgeId>   epath;
    std::vector<bool>     on_path(g.vertex_count(), false);

    for (auto start : g.vertices()) {
      std::function<void(VertexId)> extend = [&](VertexId v) {
        for (auto e : g.out_edges(v)) {
          auto w = g.range(e);
          if (w == start) {
            epath.push_back(e);
            result.push_back(detail::make_cycle(vpath, epath));
            epath.pop_back();
          } else if (w > start && !on_path[w.get()]) {
            on_path[w.get()] = true;
            vpath.push_back(w);
            epath.push_back(e);
            extend(w);
            epath.pop_back();
            vpath.pop_back();
            on_path[w.get()] = false;
          }
        }
      };
      vpath.assign(1, start);
      on_path[start.get()] = true;
      extend(start);
      on_path[start.get()] = false;
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  // Tarjan's algorithm; component ids are assigned in reverse topological
  // order of the condensation.
  inline std::vector<std::size_t> strongly_connected_components(
      Graph const& g) {
    auto const                 n = g.vertex_count();
    constexpr std::size_t      unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t>   index(n, unset), low(n, 0), comp(n, unset);
    std::vector<bool>          on_stack(n, false);
    std::vector<std::size_t>   stack;
    std::size_t                counter = 0, ncomp = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      for (auto e : g.out_edges(VertexId(v))) {
        auto w = g.range(e).get();
        if (index[w] == unset) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w]     = ncomp;
        } while (w != v);
        ++ncomp;
      }
    };
    for (std::size_t v = 0; v < n; ++v) {
      if (index[v] == unset) {
        visit(v);
      }
    }
    return comp;
  }

  // True iff no vertex lies on two distinct cycles. A strongly connected
  // component carries at most one cycle exactly when it has no more internal
  // edges than vertices.
  inline bool cycles_pairwise_disjoint(Graph const& g) {
    auto const comp = strongly_connected_components(g);
    std::size_t ncomp = 0;
    for (auto c : comp) {
      ncomp = std::max(ncomp, c + 1);
    }
    std::vector<std::size_t> vertices(ncomp, 0), internal(ncomp, 0);
    for (auto v : g.vertices()) {
      ++vertices[comp[v.get()]];
    }
    for (auto e : g.edges()) {
      auto c = comp[g.source(e).get()];
      if (c == comp[g.range(e).get()]) {
        ++internal[c];
      }
    }
    for (std::size_t c = 0; c < ncomp; ++c) {
      if (internal[c] > vertices[c]) {
        return false;
      }
    }
    return true;
  }

  inline bool has_exit(Cycle const& c, Graph const& g) {
    for (auto v : c.vertices) {
      for (auto e : g.out_edges(v)) {
        if (!c.contains(e)) {
          return true;
        }
      }
    }
    return false;
  }

  // reachable[v][w] iff there is a path (possibly empty) from v to w.
  inline std::vector<std::vector<bool>> reachability(Graph const& g) {
    auto const                     n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> todo{s};
      reach[s][s] = true;
      while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (auto e : g.out_edges(VertexId(v))) {
          auto w = g.range(e).get();
          if (!reach[s][w]) {
            reach[s][w] = true;
            todo.push_back(w);
          }
        }
      }
    }
    return reach;
  }

  // leads_to[i][j] iff i != j and some path runs from cycles[i] to cycles[j].
  inline std::vector<std::vector<bool>> cycle_relation(
      Graph const&              g,
      std::vector<Cycle> const& cycles) {
    auto const reach = reachability(g);
    auto const k     = cycles.size();
    std::vector<std::vector<bool>> leads_to(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) {
          continue;
        }
        for (auto v : cycles[i].vertices) {
          for (auto w : cycles[j].vertices) {
            if (reach[v.get()][w.get()]) {
              leads_to[i][j] = true;
            }
          }
        }
      }
    }
    return leads_to;
  }

  // Longest chains of cycles. Requires pairwise disjoint cycles, in which case
  // the relation between distinct cycles is acyclic and longest chains are
  // longest paths in a DAG.
  inline ChainStats chain_stats(Graph const& g) {
    if (!cycles_pairwise_disjoint(g)) {
      throw std::invalid_argument(
          "chain_stats: the graph has two distinct cycles sharing a vertex");
    }
    auto const cycles   = find_cycles(g);
    auto const leads_to = cycle_relation(g, cycles);
    auto const k        = cycles.size();

    // longest[i]: longest chain starting at cycle i; next[i] its successor.
    // exit_len[i]: longest chain starting at i whose last cycle has an exit.
    constexpr std::size_t    none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> longest(k, 0), next(k, none);
    std::vector<std::size_t> exit_len(k, 0), exit_next(k, none);
    std::vector<bool>        exits(k), done(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      exits[i] = has_exit(cycles[i], g);
    }
    std::function<void(std::size_t)> solve = [&](std::size_t i) {
      if (done[i]) {
        return;
      }
      longest[i]  = 1;
      exit_len[i] = exits[i] ? 1 : 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (!leads_to[i][j]) {
          continue;
        }
        solve(j);
        if (longest[j] + 1 > longest[i]) {
          longest[i] = longest[j] + 1;
          next[i]    = j;
        }
        if (exit_len[j] > 0 && exit_len[j] + 1 > exit_len[i]) {
          exit_len[i]  = exit_len[j] + 1;
          exit_next[i] = j;
        }
      }
      done[i] = true;
    };

    ChainStats  stats;
    std::size_t best1 = none, best2 = none;
    for (std::size_t i = 0; i < k; ++i) {
      solve(i);
      if (longest[i] > stats.d1) {
        stats.d1 = longest[i];
        best1    = i;
      }
      if (exit_len[i] > stats.d2) {
        stats.d2 = exit_len[i];
        best2    = i;
      }
    }
    for (auto i = best1; i != none; i = next[i]) {
      stats.witness_chain_d1.push_back(cycles[i]);
    }
    for (auto i = best2; i != none; i = exit_next[i]) {
      stats.witness_chain_d2.push_back(cycles[i]);
    }
    return stats;
  }

}  // namespace lpa

#endif  // LPA_CYCLES_HPP_
