// Graphs, random generators and brute-force oracles shared by the tests.
// Nothing here calls into the code paths it is used to check.

#ifndef LPA_TESTS_FIXTURES_HPP_
#define LPA_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpa/lpa.hpp"

namespace lpa::test {

  inline Graph line_graph() {
    return Graph::make({"v", "w"}, {{"f", "v", "w"}});
  }

  inline Graph loop_graph() {
    return Graph::make({"v"}, {{"e", "v", "v"}});
  }

  // loop e = special at v, exit f into the sink w
  inline Graph toeplitz_graph() {
    return Graph::make(
        {"v", "w"}, {{"e", "v", "v"}, {"f", "v", "w"}}, {{"v", "e"}});
  }

  inline Graph rose2_graph() {
    return Graph::make({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}});
  }

  // loops a at v and b at w, joined by c: v -> w
  inline Graph two_loops_joined() {
    return Graph::make({"v", "w"},
                       {{"a", "v", "v"}, {"c", "v", "w"}, {"b", "w", "w"}});
  }

  // two_loops_joined plus d: w -> x into a sink; the loops are special
  inline Graph two_loops_exit() {
    return Graph::make(
        {"v", "w", "x"},
        {{"a", "v", "v"}, {"c", "v", "w"}, {"b", "w", "w"}, {"d", "w", "x"}},
        {{"v", "a"}, {"w", "b"}});
  }

  inline Graph three_loop_chain() {
    return Graph::make({"u", "v", "w"},
                       {{"a", "u", "u"},
                        {"c", "u", "v"},
                        {"b", "v", "v"},
                        {"d", "v", "w"},
                        {"e", "w", "w"}});
  }

  // u -> v -> w -> x path
  inline Graph path3_graph() {
    return Graph::make({"u", "v", "w", "x"},
                       {{"e", "u", "v"}, {"f", "v", "w"}, {"g", "w", "x"}});
  }

  // a 2-cycle (a, b) through v and w and a 3-cycle (c, d, h) through v, x, y
  inline Graph two_three_cycles() {
    return Graph::make({"v", "w", "x", "y"},
                       {{"a", "v", "w"},
                        {"b", "w", "v"},
                        {"c", "v", "x"},
                        {"d", "x", "y"},
                        {"h", "y", "v"}});
  }

  struct NamedGraph {
    std::string name;
    Graph       graph;
    std::size_t gk;  // meaningful when !exponential
    bool        exponential;
  };

  inline std::vector<NamedGraph> catalog() {
    return {{"a2_line", line_graph(), 0, false},
            {"loop", loop_graph(), 1, false},
            {"toeplitz", toeplitz_graph(), 2, false},
            {"two_loops_joined", two_loops_joined(), 3, false},
            {"two_loops_exit", two_loops_exit(), 4, false},
            {"three_loop_chain", three_loop_chain(), 5, false},
            {"rose2", rose2_graph(), 0, true}};
  }

  // Random graph with up to max_v vertices and max_e edges, random special
  // edges. Vertices and edges are named v0.., e0...
  inline Graph random_graph(std::mt19937&  rng,
                            std::size_t    max_v,
                            std::size_t    max_e) {
    std::uniform_int_distribution<std::size_t> nv_dist(1, max_v);
    auto const                                 nv = nv_dist(rng);
    std::uniform_int_distribution<std::size_t> ne_dist(0, max_e);
    auto const                                 ne = ne_dist(rng);
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    std::vector<std::string>                   vs;
    for (std::size_t i = 0; i < nv; ++i) {
      vs.push_back("v" + std::to_string(i));
    }
    std::vector<EdgeSpec>                    es;
    std::map<std::string, std::vector<std::string>> out;
    for (std::size_t i = 0; i < ne; ++i) {
      auto s = vs[pick(rng)], d = vs[pick(rng)];
      es.push_back({"e" + std::to_string(i), s, d});
      out[s].push_back(es.back().id);
    }
    std::map<std::string, std::string> special;
    for (auto const& [v, edges] : out) {
      std::uniform_int_distribution<std::size_t> k(0, edges.size() - 1);
      special[v] = edges[k(rng)];
    }
    return Graph::make(vs, es, special);
  }

  // Random graph whose cycles are pairwise disjoint: loops and simple cycles
  // on disjoint vertex blocks, plus forward edges between blocks (which can
  // never close a new cycle) and edges into fresh sinks.
  inline Graph random_disjoint_graph(std::mt19937& rng,
                                     std::size_t   max_blocks = 4) {
    std::uniform_int_distribution<std::size_t> nb_dist(1, max_blocks);
    std::uniform_int_distribution<std::size_t> len_dist(0, 3);
    auto const                                 nb = nb_dist(rng);
    std::vector<std::string>                   vs;
    std::vector<EdgeSpec>                      es;
    std::vector<std::vector<std::string>>      blocks;
    auto edge = [&](std::string const& s, std::string const& d) {
      es.push_back({"e" + std::to_string(es.size()), s, d});
    };
    for (std::size_t b = 0; b < nb; ++b) {
      auto const len = len_dist(rng);  // 0 = acyclic single vertex
      std::vector<std::string> block;
      for (std::size_t i = 0; i < std::max<std::size_t>(len, 1); ++i) {
        block.push_back("v" + std::to_string(vs.size()));
        vs.push_back(block.back());
      }
      for (std::size_t i = 0; len > 0 && i < len; ++i) {
        edge(block[i], block[(i + 1) % len]);
      }
      blocks.push_back(block);
    }
    std::bernoulli_distribution coin(0.5);
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t c = b + 1; c < nb; ++c) {
        if (coin(rng)) {
          std::uniform_int_distribution<std::size_t> pb(0, blocks[b].size() - 1);
          std::uniform_int_distribution<std::size_t> pc(0, blocks[c].size() - 1);
          edge(blocks[b][pb(rng)], blocks[c][pc(rng)]);
        }
      }
    }
    if (coin(rng)) {
      std::string sink = "v" + std::to_string(vs.size());
      vs.push_back(sink);
      std::uniform_int_distribution<std::size_t> pv(0, vs.size() - 2);
      edge(vs[pv(rng)], sink);
    }
    return Graph::make(vs, es);
  }

  // Same graph with vertices and edges declared in a random order.
  inline Graph shuffled(Graph const& g, std::mt19937& rng) {
    auto vs = g.vertex_names();
    auto es = g.edge_specs();
    std::shuffle(vs.begin(), vs.end(), rng);
    std::shuffle(es.begin(), es.end(), rng);
    return Graph::make(vs, es, g.special_map());
  }

  // ---- brute-force oracles -------------------------------------------------

  // Cycles as sets of edge names, found by trying every edge sequence of
  // length <= |V| that closes up with distinct sources.
  inline std::set<std::set<std::string>> brute_force_cycles(Graph const& g) {
    std::set<std::set<std::string>> out;
    auto const                      n = g.vertex_count();
    auto const                      m = g.edge_count();
    std::vector<std::size_t>        seq;
    for (std::size_t len = 1; len <= n && m > 0; ++len) {
      seq.assign(len, 0);
      while (true) {
        bool                  ok = true;
        std::set<std::size_t> sources;
        for (std::size_t i = 0; i < len && ok; ++i) {
          auto e  = EdgeId(seq[i]);
          auto nx = EdgeId(seq[(i + 1) % len]);
          ok      = g.range(e) == g.source(nx)
               && sources.insert(g.source(e).get()).second;
        }
        if (ok) {
          std::set<std::string> c;
          for (auto i : seq) {
            c.insert(g.name(EdgeId(i)));
          }
          out.insert(c);
        }
        std::size_t i = len;
        while (i > 0 && ++seq[i - 1] == m) {
          seq[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
    }
    return out;
  }

  inline bool path_exists(Graph const& g, VertexId from, VertexId to) {
    std::set<std::size_t>    seen{from.get()};
    std::vector<std::size_t> stack{from.get()};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (v == to.get()) {
        return true;
      }
      for (auto e : g.edges()) {
        if (g.source(e).get() == v && seen.insert(g.range(e).get()).second) {
          stack.push_back(g.range(e).get());
        }
      }
    }
    return false;
  }

  struct BruteChains {
    std::size_t d1 = 0;
    std::size_t d2 = 0;
  };

  // Tries every ordered sequence of distinct cycles.
  inline BruteChains brute_force_chains(Graph const& g) {
    auto const  cycles = find_cycles(g);
    auto const  k      = cycles.size();
    auto leads = [&](std::size_t i, std::size_t j) {
      for (auto v : cycles[i].vertices) {
        for (auto w : cycles[j].vertices) {
          if (path_exists(g, v, w)) {
            return true;
          }
        }
      }
      return false;
    };
    auto exits = [&](std::size_t i) {
      for (auto e : g.edges()) {
        if (cycles[i].contains(g.source(e))
            && std::find(cycles[i].edges.begin(), cycles[i].edges.end(), e)
                   == cycles[i].edges.end()) {
          return true;
        }
      }
      return false;
    };
    BruteChains out;
    std::vector<std::size_t> chain;
    std::vector<bool>        used(k, false);
    auto extend = [&](auto&& self) -> void {
      if (!chain.empty()) {
        out.d1 = std::max(out.d1, chain.size());
        if (exits(chain.back())) {
          out.d2 = std::max(out.d2, chain.size());
        }
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (!used[j] && (chain.empty() || leads(chain.back(), j))) {
          used[j] = true;
          chain.push_back(j);
          self(self);
          chain.pop_back();
          used[j] = false;
        }
      }
    };
    extend(extend);
    return out;
  }

  // Every word over the alphabet of g of length exactly len, in some order.
  template <typename F>
  void for_each_word(Graph const& g, std::size_t len, F&& f) {
    std::vector<Generator> alphabet;
    for (auto v : g.vertices()) {
      alphabet.push_back(Generator::vertex(v));
    }
    for (auto e : g.edges()) {
      alphabet.push_back(Generator::edge(e));
      alphabet.push_back(Generator::star(e));
    }
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      Monomial w;
      for (auto i : idx) {
        w.letters.push_back(alphabet[i]);
      }
      f(w);
      std::size_t i = len;
      while (i > 0 && ++idx[i - 1] == alphabet.size()) {
        idx[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
  }

  // Number of basis words of length <= n, by explicit enumeration.
  inline std::uint64_t count_basis_words(Graph const& g, std::size_t n) {
    std::uint64_t count = 0;
    for (std::size_t len = 1; len <= n; ++len) {
      for_each_word(g, len, [&](Monomial const& w) {
        count += is_basis_word(w, g) ? 1 : 0;
      });
    }
    return count;
  }

  inline Monomial random_word(Graph const& g, std::mt19937& rng,
                              std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<std::size_t> letter(
        0, g.vertex_count() + 2 * g.edge_count() - 1);
    Monomial w;
    auto     len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) {
      auto k = letter(rng);
      if (k < g.vertex_count()) {
        w.letters.push_back(Generator::vertex(VertexId(k)));
      } else {
        k -= g.vertex_count();
        w.letters.push_back(k % 2 == 0 ? Generator::edge(EdgeId(k / 2))
                                       : Generator::star(EdgeId(k / 2)));
      }
    }
    return w;
  }

  // A random basis word built directly: a vertex, a path, a ghost path, or
  // p q* from a forward walk and a backward walk meeting at one vertex.
  inline Monomial random_basis_word(Graph const& g, std::mt19937& rng,
                                    std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> pick_v(0, g.vertex_count() - 1);
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<int>         kind(0, 9);
    auto backward = [&](VertexId end, std::size_t len) {
      // edges f_1..f_len with r(f_len) = end, built from the end
      std::vector<EdgeId> rev;
      auto                at = end;
      while (rev.size() < len && !g.in_edges(at).empty()) {
        auto ins = g.in_edges(at);
        std::uniform_int_distribution<std::size_t> k(0, ins.size() - 1);
        rev.push_back(ins[k(rng)]);
        at = g.source(rev.back());
      }
      std::reverse(rev.begin(), rev.end());
      return rev;
    };
    while (true) {
      auto const v = VertexId(pick_v(rng));
      auto const k = kind(rng);
      if (k == 0 || g.edge_count() == 0) {
        return Monomial{Generator::vertex(v)};
      }
      auto const total = len_dist(rng);
      auto       p     = backward(v, k <= 3 ? total : std::max<std::size_t>(
                                                       1, total / 2));
      if (p.empty()) {
        continue;
      }
      if (k <= 2) {
        return path_word(p);
      }
      if (k == 3) {
        return path_word(p).adjoint();
      }
      if (total < 2) {
        continue;
      }
      auto q = backward(v, total - p.size());
      if (q.empty() || (p.back() == q.back() && g.is_special(p.back()))) {
        continue;
      }
      return path_word(p) * path_word(q).adjoint();
    }
  }

  // Random element: sum of up to max_terms basis words of length <= max_len
  // with integer coefficients in [-3, 3].
  inline AlgebraElement random_element(Graph const& g, std::mt19937& rng,
                                       std::size_t max_terms = 4,
                                       std::size_t max_len   = 4) {
    std::uniform_int_distribution<int>         coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> terms(1, max_terms);
    AlgebraElement                             x;
    auto const                                 k = terms(rng);
    for (std::size_t i = 0; i < k; ++i) {
      x.add(random_basis_word(g, rng, max_len), coeff(rng));
    }
    return x;
  }

}  // namespace lpa::test

#endif  // LPA_TESTS_FIXTURES_HPP_
