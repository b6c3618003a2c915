// The oriented rewriting system of the Leavitt path algebra of a finite
// graph: rule construction, reduction to normal form, products, the
// involution, and a critical-pair check of confluence.

#ifndef LPA_REWRITE_HPP_
#define LPA_REWRITE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "graph.hpp"
#include "order.hpp"

namespace lpa {

  // Which family of defining relations a rule comes from.
  enum class RuleFamily : std::uint8_t {
    VertexProduct,  // uw -> delta(u, w) u
    Absorption,     // s(e)e -> e, e r(e) -> e, r(e)e* -> e*, e* s(e) -> e*
    GhostEdge,      // e* f -> delta(e, f) r(e)
    Special,        // g g* -> v - sum of e e* over the other edges at v
    Mismatch,       // ve, ev, ve*, e*v -> 0 when the vertex does not fit
    Adjacency       // ef, ef*, e*f* -> 0 when the letters do not compose
  };

  inline char const* to_string(RuleFamily f) {
    switch (f) {
      case RuleFamily::VertexProduct: return "vertex-product";
      case RuleFamily::Absorption: return "absorption";
      case RuleFamily::GhostEdge: return "ghost-edge";
      case RuleFamily::Special: return "special";
      case RuleFamily::Mismatch: return "mismatch";
      case RuleFamily::Adjacency: return "adjacency";
    }
    return "";
  }

  struct RewriteRule {
    Monomial       lhs;
    AlgebraElement rhs;
    RuleFamily     family;
  };

  enum class Strategy : std::uint8_t {
    // Greatest applicable left-hand side, at its leftmost occurrence.
    GreatestLeftmost,
    // Earliest starting position, shortest left-hand side there.
    LeftmostInnermost,
    // Latest ending position, longest left-hand side there.
    RightmostOutermost
  };

  struct Redex {
    std::size_t pos;
    std::size_t rule;
  };

  class RuleSet {
   public:
    // Left-hand sides must be distinct words of length 1 or 2, and every
    // right-hand side word must be smaller than its left-hand side.
    RuleSet(Graph graph, OrderContext order, std::vector<RewriteRule> rules)
        : _graph(std::move(graph)),
          _order(std::move(order)),
          _rules(std::move(rules)) {
      auto const n = _order.alphabet_size();
      _single.assign(n, none);
      _pair.assign(n * n, none);
      for (std::size_t i = 0; i < _rules.size(); ++i) {
        auto const& r = _rules[i];
        std::int32_t* slot = nullptr;
        if (r.lhs.size() == 1) {
          slot = &_single[_order.rank(r.lhs[0])];
        } else if (r.lhs.size() == 2) {
          slot = &_pair[_order.rank(r.lhs[0]) * n + _order.rank(r.lhs[1])];
        } else {
          throw std::invalid_argument("rewrite rule lhs '"
                                      + lpa::to_string(r.lhs, _graph)
                                      + "' must have length 1 or 2");
        }
        if (*slot != none) {
          throw std::invalid_argument("duplicate rewrite rule lhs '"
                                      + lpa::to_string(r.lhs, _graph) + "'");
        }
        for (auto const& [m, c] : r.rhs.terms()) {
          if (_order.compare(m, r.lhs) >= 0) {
            throw std::invalid_argument(
                "rewrite rule '" + lpa::to_string(r.lhs, _graph)
                + "' does not decrease: rhs word '" + lpa::to_string(m, _graph)
                + "'");
          }
        }
        *slot = static_cast<std::int32_t>(i);
      }
    }

    Graph const&                    graph() const noexcept { return _graph; }
    OrderContext const&             order() const noexcept { return _order; }
    std::vector<RewriteRule> const& rules() const noexcept { return _rules; }
    std::size_t size() const noexcept { return _rules.size(); }

    RewriteRule const* find(Monomial const& lhs) const {
      auto const n = _order.alphabet_size();
      std::int32_t idx = none;
      if (lhs.size() == 1) {
        idx = _single[_order.rank(lhs[0])];
      } else if (lhs.size() == 2) {
        idx = _pair[_order.rank(lhs[0]) * n + _order.rank(lhs[1])];
      }
      return idx == none ? nullptr : &_rules[idx];
    }

    // The same system with the rules matching `drop` removed.
    RuleSet without(std::function<bool(RewriteRule const&)> const& drop) const {
      std::vector<RewriteRule> kept;
      for (auto const& r : _rules) {
        if (!drop(r)) {
          kept.push_back(r);
        }
      }
      return RuleSet(_graph, _order, std::move(kept));
    }

    std::optional<Redex> find_redex(Monomial const& w, Strategy s) const {
      auto const           n = _order.alphabet_size();
      std::optional<Redex> best;
      auto consider = [&](std::size_t pos, std::int32_t idx) {
        if (idx == none) {
          return;
        }
        Redex cand{pos, static_cast<std::size_t>(idx)};
        if (!best) {
          best = cand;
          return;
        }
        auto const& a = _rules[cand.rule].lhs;
        auto const& b = _rules[best->rule].lhs;
        switch (s) {
          case Strategy::GreatestLeftmost:
            if (_order.compare(a, b) > 0) {
              best = cand;
            }
            break;
          case Strategy::LeftmostInnermost:
            // positions are visited in increasing order
            if (cand.pos == best->pos && a.size() < b.size()) {
              best = cand;
            }
            break;
          case Strategy::RightmostOutermost: {
            auto end_a = cand.pos + a.size(), end_b = best->pos + b.size();
            if (end_a > end_b || (end_a == end_b && a.size() > b.size())) {
              best = cand;
            }
            break;
          }
        }
      };
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto r = _order.rank(w[i]);
        consider(i, _single[r]);
        if (i + 1 < w.size()) {
          consider(i, _pair[r * n + _order.rank(w[i + 1])]);
        }
        if (s == Strategy::LeftmostInnermost && best) {
          break;
        }
      }
      return best;
    }

    bool is_irreducible(Monomial const& w) const {
      return !find_redex(w, Strategy::LeftmostInnermost).has_value();
    }

    // One rewriting step: the rule's rhs substituted at pos, with coefficient.
    template <typename Sink>
    void apply(Monomial const&    w,
               Redex              redex,
               Coefficient const& coeff,
               Sink&&             sink) const {
      auto const& rule = _rules[redex.rule];
      auto const  tail = redex.pos + rule.lhs.size();
      for (auto const& [m, c] : rule.rhs.terms()) {
        Monomial out;
        out.letters.reserve(w.size() - rule.lhs.size() + m.size());
        out.letters.insert(
            out.letters.end(), w.letters.begin(), w.letters.begin() + redex.pos);
        out.letters.insert(out.letters.end(), m.letters.begin(), m.letters.end());
        out.letters.insert(
            out.letters.end(), w.letters.begin() + tail, w.letters.end());
        sink(std::move(out), coeff * c);
      }
    }

   private:
    static constexpr std::int32_t none = -1;

    Graph                     _graph;
    OrderContext              _order;
    std::vector<RewriteRule>  _rules;
    std::vector<std::int32_t> _single;
    std::vector<std::int32_t> _pair;
  };

  // The defining relations, oriented by the length-lex order, together with
  // the zero rules for non-composable letter pairs.
  inline RuleSet build_rules(Graph const& g, OrderContext const& ctx) {
    using G = Generator;
    std::vector<RewriteRule> rules;
    auto rule = [&](Monomial lhs, AlgebraElement rhs, RuleFamily f) {
      rules.push_back({std::move(lhs), std::move(rhs), f});
    };
    auto single = [](Generator x) { return AlgebraElement(Monomial{x}); };

    for (auto u : g.vertices()) {
      for (auto w : g.vertices()) {
        rule({G::vertex(u), G::vertex(w)},
             u == w ? single(G::vertex(u)) : AlgebraElement(),
             RuleFamily::VertexProduct);
      }
    }

    for (auto e : g.edges()) {
      for (auto v : g.vertices()) {
        auto fam_left  = v == g.source(e) ? RuleFamily::Absorption
                                          : RuleFamily::Mismatch;
        auto fam_right = v == g.range(e) ? RuleFamily::Absorption
                                         : RuleFamily::Mismatch;
        auto e_or_zero = [&](bool keep, Generator x) {
          return keep ? single(x) : AlgebraElement();
        };
        rule({G::vertex(v), G::edge(e)},
             e_or_zero(v == g.source(e), G::edge(e)), fam_left);
        rule({G::edge(e), G::vertex(v)},
             e_or_zero(v == g.range(e), G::edge(e)), fam_right);
        rule({G::vertex(v), G::star(e)},
             e_or_zero(v == g.range(e), G::star(e)), fam_right);
        rule({G::star(e), G::vertex(v)},
             e_or_zero(v == g.source(e), G::star(e)), fam_left);
      }
    }

    for (auto e : g.edges()) {
      for (auto f : g.edges()) {
        rule({G::star(e), G::edge(f)},
             e == f ? single(G::vertex(g.range(e))) : AlgebraElement(),
             RuleFamily::GhostEdge);
      }
    }

    for (auto v : g.vertices()) {
      if (g.is_sink(v)) {
        continue;
      }
      auto special = g.special(v);
      if (!special) {
        throw std::invalid_argument("no special edge at non-sink vertex '"
                                    + g.name(v) + "'");
      }
      AlgebraElement rhs = single(G::vertex(v));
      for (auto e : g.out_edges(v)) {
        if (e != *special) {
          rhs.add({G::edge(e), G::star(e)}, -1);
        }
      }
      rule({G::edge(*special), G::star(*special)},
           std::move(rhs),
           RuleFamily::Special);
    }

    for (auto e : g.edges()) {
      for (auto f : g.edges()) {
        if (g.range(e) != g.source(f)) {
          rule({G::edge(e), G::edge(f)}, {}, RuleFamily::Adjacency);
        }
        if (g.range(e) != g.range(f)) {
          rule({G::edge(e), G::star(f)}, {}, RuleFamily::Adjacency);
        }
        if (g.source(e) != g.range(f)) {
          rule({G::star(e), G::star(f)}, {}, RuleFamily::Adjacency);
        }
      }
    }
    return RuleSet(g, ctx, std::move(rules));
  }

  inline RuleSet build_rules(Graph const& g) {
    return build_rules(g, build_order(g));
  }

  // Normal form of x. Words are processed greatest first so each word is
  // rewritten once, after all contributions to its coefficient are in.
  inline AlgebraElement reduce(AlgebraElement const& x,
                               RuleSet const&        rs,
                               Strategy s = Strategy::GreatestLeftmost) {
    std::map<Monomial, Coefficient, OrderContext::Less> pending(
        rs.order().less());
    auto push = [&](Monomial&& m, Coefficient const& c) {
      if (c == 0) {
        return;
      }
      auto [it, inserted] = pending.try_emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          pending.erase(it);
        }
      }
    };
    for (auto const& [m, c] : x.terms()) {
      push(Monomial(m), c);
    }

    AlgebraElement result;
    while (!pending.empty()) {
      auto node  = pending.extract(std::prev(pending.end()));
      auto redex = rs.find_redex(node.key(), s);
      if (!redex) {
        result.add(node.key(), node.mapped());
      } else {
        rs.apply(node.key(), *redex, node.mapped(), push);
      }
    }
    return result;
  }

  inline AlgebraElement reduce(Monomial const& w,
                               RuleSet const&  rs,
                               Strategy        s = Strategy::GreatestLeftmost) {
    return reduce(AlgebraElement(w), rs, s);
  }

  inline AlgebraElement multiply(AlgebraElement const& x,
                                 AlgebraElement const& y,
                                 RuleSet const&        rs) {
    return reduce(concat(x, y), rs);
  }

  inline AlgebraElement involve(AlgebraElement const& x, RuleSet const& rs) {
    return reduce(star(x), rs);
  }

  // Sum of all vertices: the identity of the algebra of a finite graph.
  inline AlgebraElement vertex_sum(Graph const& g) {
    AlgebraElement out;
    for (auto v : g.vertices()) {
      out.add({Generator::vertex(v)}, 1);
    }
    return out;
  }

  struct Divergence {
    Monomial       word;
    std::size_t    first_rule;
    std::size_t    second_rule;
    AlgebraElement via_first;
    AlgebraElement via_second;
  };

  struct ConfluenceReport {
    bool                    confluent   = true;
    std::size_t             ambiguities = 0;
    std::vector<Divergence> divergences;
  };

  // Resolves every overlap and inclusion ambiguity between left-hand sides.
  // Each ambiguity word is rewritten once by each of the two rules and both
  // results are reduced to normal form.
  inline ConfluenceReport check_confluence(RuleSet const& rs) {
    auto const& rules = rs.rules();
    auto const& ctx   = rs.order();

    std::map<std::uint32_t, std::vector<std::size_t>> by_first;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      by_first[ctx.rank(rules[i].lhs[0])].push_back(i);
    }

    ConfluenceReport report;
    auto resolve = [&](Monomial const& w,
                       std::size_t     r1,
                       std::size_t     pos1,
                       std::size_t     r2,
                       std::size_t     pos2) {
      ++report.ambiguities;
      auto one_step = [&](std::size_t r, std::size_t pos) {
        AlgebraElement out;
        rs.apply(w, Redex{pos, r}, Coefficient(1),
                 [&](Monomial&& m, Coefficient const& c) { out.add(m, c); });
        return reduce(out, rs);
      };
      auto a = one_step(r1, pos1);
      auto b = one_step(r2, pos2);
      if (a != b) {
        report.divergences.push_back({w, r1, r2, std::move(a), std::move(b)});
      }
    };

    for (std::size_t r1 = 0; r1 < rules.size(); ++r1) {
      auto const& l1 = rules[r1].lhs;
      // overlaps: a proper suffix of l1 is a proper prefix of l2
      for (std::size_t k = 1; k < l1.size(); ++k) {
        auto it = by_first.find(ctx.rank(l1[l1.size() - k]));
        if (it == by_first.end()) {
          continue;
        }
        for (auto r2 : it->second) {
          auto const& l2 = rules[r2].lhs;
          if (k >= l2.size()
              || !std::equal(l1.letters.end() - k, l1.letters.end(),
                             l2.letters.begin())) {
            continue;
          }
          Monomial w = l1 * l2.subword(k, l2.size() - k);
          resolve(w, r1, 0, r2, l1.size() - k);
        }
      }
      // inclusions: l2 is a proper subword of l1
      for (std::size_t pos = 0; pos < l1.size(); ++pos) {
        auto it = by_first.find(ctx.rank(l1[pos]));
        if (it == by_first.end()) {
          continue;
        }
        for (auto r2 : it->second) {
          auto const& l2 = rules[r2].lhs;
          if (r2 == r1 || pos + l2.size() > l1.size()
              || !std::equal(l2.letters.begin(), l2.letters.end(),
                             l1.letters.begin() + pos)) {
            continue;
          }
          resolve(l1, r1, 0, r2, pos);
        }
      }
    }
    std::sort(report.divergences.begin(),
              report.divergences.end(),
              [&](Divergence const& a, Divergence const& b) {
                return ctx.compare(a.word, b.word) < 0;
              });
    report.confluent = report.divergences.empty();
    return report;
  }

}  // namespace lpa

#endif  // LPA_REWRITE_HPP_
