#include <random>

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"

using namespace lpa;
using namespace lpa::test;

namespace {
  Generator E(Graph const& g, char const* name) {
    return Generator::edge(*g.find_edge(name));
  }
  Generator S(Graph const& g, char const* name) {
    return Generator::star(*g.find_edge(name));
  }
  Generator V(Graph const& g, char const* name) {
    return Generator::vertex(*g.find_vertex(name));
  }
}  // namespace

TEST_CASE("build_order: special edge is maximal at its source", "[order]") {
  auto g   = rose2_graph();  // special(v) = f by default
  auto ctx = build_order(g);
  REQUIRE(ctx.rank(E(g, "e")) < ctx.rank(E(g, "f")));

  auto h = Graph::make({"v"},
                       {{"e", "v", "v"}, {"f", "v", "v"}},
                       {{"v", "e"}});
  auto hctx = build_order(h);
  REQUIRE(hctx.rank(E(h, "f")) < hctx.rank(E(h, "e")));
}

TEST_CASE("build_order: source order dominates edge order", "[order]") {
  auto g   = Graph::make({"v", "w"}, {{"b", "w", "v"}, {"a", "v", "w"}});
  auto ctx = build_order(g);
  REQUIRE(ctx.rank(E(g, "a")) < ctx.rank(E(g, "b")));
}

TEST_CASE("build_order: vertices < edges < ghost edges", "[order]") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto g   = random_graph(rng, 5, 8);
    auto ctx = build_order(g);
    for (auto v : g.vertices()) {
      for (auto e : g.edges()) {
        REQUIRE(ctx.rank(Generator::vertex(v)) < ctx.rank(Generator::edge(e)));
        for (auto f : g.edges()) {
          REQUIRE(ctx.rank(Generator::edge(e)) < ctx.rank(Generator::star(f)));
          if (g.source(e) < g.source(f)) {
            REQUIRE(ctx.rank(Generator::edge(e))
                    < ctx.rank(Generator::edge(f)));
          }
          if (g.source(e) == g.source(f) && g.is_special(f) && e != f) {
            REQUIRE(ctx.rank(Generator::edge(e))
                    < ctx.rank(Generator::edge(f)));
          }
        }
      }
    }
    // rank is a bijection onto [0, alphabet) with generator() its inverse
    for (std::uint32_t r = 0; r < ctx.alphabet_size(); ++r) {
      REQUIRE(ctx.rank(ctx.generator(r)) == r);
    }
  }
}

TEST_CASE("compare: examples", "[order]") {
  auto g   = rose2_graph();
  auto ctx = build_order(g);
  REQUIRE(compare(Monomial{V(g, "v")}, Monomial{E(g, "e"), S(g, "e")}, ctx)
          == std::strong_ordering::less);
  Monomial p{E(g, "e"), E(g, "f"), S(g, "e")};
  REQUIRE(compare(p, p, ctx) == std::strong_ordering::equal);
  REQUIRE(compare(Monomial{E(g, "e"), S(g, "e")},
                  Monomial{E(g, "f"), S(g, "e")},
                  ctx)
          == std::strong_ordering::less);
  // the empty word is below everything
  REQUIRE(compare(Monomial{}, Monomial{V(g, "v")}, ctx)
          == std::strong_ordering::less);
}

TEST_CASE("compare is a total order compatible with concatenation",
          "[order][property]") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    auto g   = random_graph(rng, 4, 6);
    auto ctx = build_order(g);
    for (int k = 0; k < 200; ++k) {
      auto a = random_word(g, rng, 1, 4);
      auto b = random_word(g, rng, 1, 4);
      auto c = random_word(g, rng, 1, 4);
      auto ab = compare(a, b, ctx), ba = compare(b, a, ctx);
      REQUIRE((ab < 0) == (ba > 0));
      REQUIRE((ab == 0) == (a == b));
      if (ab < 0 && compare(b, c, ctx) < 0) {
        REQUIRE(compare(a, c, ctx) < 0);
      }
      // prepending or appending a common word preserves the comparison
      auto x = random_word(g, rng, 1, 2);
      REQUIRE(compare(x * a, x * b, ctx) == ab);
      REQUIRE(compare(a * x, b * x, ctx) == ab);
    }
  }
}
