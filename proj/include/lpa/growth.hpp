// The normal-form basis, exact growth functions, a brute-force dimension
// oracle, growth-degree estimation and free-subalgebra witnesses.

#ifndef LPA_GROWTH_HPP_
#define LPA_GROWTH_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycles.hpp"
#include "element.hpp"
#include "graph.hpp"
#include "order.hpp"
#include "rewrite.hpp"

namespace lpa {

  class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  inline constexpr std::uint64_t default_word_budget = 10'000'000;

  // LPA_BUDGET, when set to a positive integer, overrides the default.
  inline std::uint64_t word_budget() {
    if (char const* env = std::getenv("LPA_BUDGET")) {
      char*              end = nullptr;
      unsigned long long v   = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return v;
      }
    }
    return default_word_budget;
  }

  // True iff m is a vertex, a path, a ghost path p*, or pq* where p and q end
  // at the same vertex and their last edges are not one and the same special
  // edge. These are exactly the words no rewrite rule applies to.
  inline bool is_basis_word(Monomial const& m, Graph const& g) {
    if (m.empty()) {
      return false;
    }
    if (m.size() == 1) {
      return true;
    }
    std::size_t split = 0;
    while (split < m.size() && m[split].kind == Kind::Edge) {
      ++split;
    }
    for (std::size_t i = split; i < m.size(); ++i) {
      if (m[i].kind != Kind::Star) {
        return false;
      }
    }
    for (std::size_t i = 0; i + 1 < split; ++i) {
      if (g.range(m[i].as_edge()) != g.source(m[i + 1].as_edge())) {
        return false;
      }
    }
    // e* f* is the adjoint of the path f e
    for (std::size_t i = split; i + 1 < m.size(); ++i) {
      if (g.source(m[i].as_edge()) != g.range(m[i + 1].as_edge())) {
        return false;
      }
    }
    if (split > 0 && split < m.size()) {
      auto last_p = m[split - 1].as_edge();
      auto last_q = m[split].as_edge();
      if (g.range(last_p) != g.range(last_q)) {
        return false;
      }
      if (last_p == last_q && g.is_special(last_p)) {
        return false;
      }
    }
    return true;
  }

  // counts[n - 1] = number of basis words of length at most n.
  struct GrowthSequence {
    std::vector<BigInt> counts;

    std::size_t   max_n() const noexcept { return counts.size(); }
    BigInt const& at(std::size_t n) const { return counts.at(n - 1); }
  };

  // Exact growth function g(1..max_n), by counting paths ending at each vertex
  // and convolving. No words are materialised.
  //
  // With P_w(a) the number of paths of length a ending at w (P_w(0) = 1) and
  // conv_w(L) = sum_{a=0..L} P_w(a) P_w(L - a), the words pq* of length L
  // number sum_w (conv_w(L) - 2 P_w(L)) minus, for each non-sink v, the
  // conv_v(L - 2) pairs ending in the same special edge at v.
  inline GrowthSequence growth_sequence(Graph const& g, std::size_t max_n) {
    if (max_n == 0) {
      throw std::invalid_argument("growth_sequence: N must be at least 1");
    }
    auto const nv = g.vertex_count();

    std::vector<std::vector<BigInt>> paths(nv, std::vector<BigInt>(max_n + 1));
    for (std::size_t w = 0; w < nv; ++w) {
      paths[w][0] = 1;
    }
    for (std::size_t a = 1; a <= max_n; ++a) {
      for (auto e : g.edges()) {
        auto const& from = paths[g.source(e).get()][a - 1];
        if (!from.is_zero()) {
          paths[g.range(e).get()][a] += from;
        }
      }
    }

    // Where P_w vanishes from some length on, convolutions stop early.
    std::vector<std::size_t> support(nv, 0);
    for (std::size_t w = 0; w < nv; ++w) {
      for (std::size_t a = 0; a <= max_n; ++a) {
        if (!paths[w][a].is_zero()) {
          support[w] = a + 1;
        }
      }
    }
    auto conv = [&](std::size_t w, std::size_t len) {
      BigInt      sum  = 0;
      auto const& p    = paths[w];
      std::size_t lo   = len >= support[w] ? len - support[w] + 1 : 0;
      std::size_t hi   = std::min(len, support[w] - 1);
      for (std::size_t a = lo; a <= hi; ++a) {
        auto const& x = p[a];
        auto const& y = p[len - a];
        if (!x.is_zero() && !y.is_zero()) {
          sum += x * y;
        }
      }
      return sum;
    };

    GrowthSequence seq;
    seq.counts.reserve(max_n);
    BigInt total = nv;
    for (std::size_t len = 1; len <= max_n; ++len) {
      for (std::size_t w = 0; w < nv; ++w) {
        total += conv(w, len);  // = 2 P_w(len) + sum over a=1..len-1
      }
      if (len >= 2) {
        for (auto v : g.vertices()) {
          if (!g.is_sink(v)) {
            total -= conv(v.get(), len - 2);
          }
        }
      }
      seq.counts.push_back(total);
    }
    return seq;
  }

  // Every basis word of length at most max_n, sorted by the length-lex order.
  inline std::vector<Monomial> enumerate_basis(Graph const&  g,
                                               std::size_t   max_n,
                                               std::uint64_t budget) {
    auto const expected = growth_sequence(g, max_n).at(max_n);
    if (expected > budget) {
      throw BudgetExceeded("basis has " + expected.str()
                           + " words of length <= " + std::to_string(max_n)
                           + ", over the budget of " + std::to_string(budget));
    }
    // by_end[w][a]: paths of length a ending at w
    auto const nv = g.vertex_count();
    std::vector<std::vector<std::vector<Monomial>>> by_end(
        nv, std::vector<std::vector<Monomial>>(max_n + 1));
    for (auto e : g.edges()) {
      by_end[g.range(e).get()][1].push_back(Monomial{Generator::edge(e)});
    }
    for (std::size_t a = 2; a <= max_n; ++a) {
      for (auto e : g.edges()) {
        for (auto const& p : by_end[g.source(e).get()][a - 1]) {
          by_end[g.range(e).get()][a].push_back(
              p * Monomial{Generator::edge(e)});
        }
      }
    }

    std::vector<Monomial> out;
    for (auto v : g.vertices()) {
      out.push_back(Monomial{Generator::vertex(v)});
    }
    for (std::size_t w = 0; w < nv; ++w) {
      for (std::size_t a = 1; a <= max_n; ++a) {
        for (auto const& p : by_end[w][a]) {
          out.push_back(p);
          out.push_back(p.adjoint());
          for (std::size_t b = 1; a + b <= max_n; ++b) {
            for (auto const& q : by_end[w][b]) {
              auto last_p = p.letters.back().as_edge();
              auto last_q = q.letters.back().as_edge();
              if (last_p == last_q && g.is_special(last_p)) {
                continue;
              }
              out.push_back(p * q.adjoint());
            }
          }
        }
      }
    }
    auto ctx = build_order(g);
    std::sort(out.begin(), out.end(), ctx.less());
    return out;
  }

  // dim V^n computed independently of the counting formula: reduce every word
  // of length at most n and count the distinct normal-form words. Every basis
  // word of length <= n is itself such a word, so the support of the normal
  // forms spans exactly V^n.
  inline std::uint64_t dim_oracle(Graph const&  g,
                                  std::size_t   n,
                                  std::uint64_t budget) {
    if (n == 0) {
      throw std::invalid_argument("dim_oracle: n must be at least 1");
    }
    auto const rs = build_rules(g);
    auto const a  = rs.order().alphabet_size();

    BigInt total = 0, layer = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      layer *= a;
      total += layer;
    }
    if (total > budget) {
      throw BudgetExceeded("dim_oracle: " + total.str() + " words of length <= "
                           + std::to_string(n) + " exceed the budget of "
                           + std::to_string(budget));
    }

    std::set<Monomial>         support;
    std::vector<std::uint32_t> digits;
    for (std::size_t len = 1; len <= n; ++len) {
      digits.assign(len, 0);
      while (true) {
        Monomial w;
        w.letters.reserve(len);
        for (auto d : digits) {
          w.letters.push_back(rs.order().generator(d));
        }
        auto nf = reduce(w, rs);
        for (auto const& [m, c] : nf.terms()) {
          if (m.size() > len || !is_basis_word(m, g)
              || boost::multiprecision::denominator(c) != 1) {
            throw std::logic_error("dim_oracle: word '" + to_string(w, g)
                                   + "' has a non-basis normal form term '"
                                   + to_string(m, g) + "'");
          }
          support.insert(m);
        }
        std::size_t i = len;
        while (i > 0 && ++digits[i - 1] == a) {
          digits[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
    }
    return support.size();
  }

  inline std::uint64_t dim_oracle(Graph const& g, std::size_t n) {
    return dim_oracle(g, n, word_budget());
  }

  inline double log_of(BigInt const& x) {
    if (x <= 0) {
      throw std::domain_error("log_of: non-positive argument");
    }
    auto const bits = boost::multiprecision::msb(x);
    if (bits < 900) {
      return std::log(x.convert_to<double>());
    }
    auto const shift = bits - 60;
    BigInt     top   = x >> shift;
    return std::log(top.convert_to<double>())
           + static_cast<double>(shift) * std::log(2.0);
  }

  struct GkEstimateOptions {
    // slope of ln g(n) against n above which growth is called exponential
    double exponential_slope = 0.05;
    std::size_t min_length   = 16;
  };

  struct GkEstimate {
    bool   exponential = false;
    // least-squares slope of ln g(n) against ln n over n in [N/2, N]
    double degree = 0.0;
    // least-squares slope of ln g(n) against n over the same window
    double log_linear_slope = 0.0;
  };

  namespace detail {
    inline double ls_slope(std::vector<double> const& x,
                           std::vector<double> const& y) {
      double const n  = static_cast<double>(x.size());
      double       sx = 0, sy = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
      }
      double const mx = sx / n, my = sy / n;
      double       num = 0, den = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
      }
      return num / den;
    }
  }  // namespace detail

  inline GkEstimate estimate_gk(GrowthSequence const&    seq,
                                GkEstimateOptions const& opts = {}) {
    auto const big_n = seq.max_n();
    if (big_n < opts.min_length) {
      throw std::invalid_argument("estimate_gk: need at least "
                                  + std::to_string(opts.min_length)
                                  + " terms, got " + std::to_string(big_n));
    }
    std::vector<double> n_lin, n_log, g_log;
    for (std::size_t n = big_n / 2; n <= big_n; ++n) {
      if (seq.at(n) <= 0) {
        throw std::invalid_argument("estimate_gk: g(" + std::to_string(n)
                                    + ") is not positive");
      }
      n_lin.push_back(static_cast<double>(n));
      n_log.push_back(std::log(static_cast<double>(n)));
      g_log.push_back(log_of(seq.at(n)));
    }
    GkEstimate est;
    est.log_linear_slope = detail::ls_slope(n_lin, g_log);
    est.degree           = detail::ls_slope(n_log, g_log);
    est.exponential      = est.log_linear_slope > opts.exponential_slope;
    return est;
  }

  // Two full cycle words based at a common vertex.
  struct FreeWitness {
    Monomial p;
    Monomial q;
    VertexId shared_vertex;
  };

  // The first pair of distinct cycles (in canonical order) sharing a vertex,
  // both read from their smallest shared vertex.
  inline std::optional<FreeWitness> free_witness(Graph const& g) {
    auto const cycles = find_cycles(g);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        std::optional<VertexId> shared;
        for (auto v : cycles[i].vertices) {
          if (cycles[j].contains(v) && (!shared || v < *shared)) {
            shared = v;
          }
        }
        if (shared) {
          return FreeWitness{path_word(*cycles[i].based_at(*shared)),
                             path_word(*cycles[j].based_at(*shared)),
                             *shared};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace lpa

#endif  // LPA_GROWTH_HPP_
