// Full analysis of a graph, rendered as JSON or plain text.

#ifndef LPA_REPORT_HPP_
#define LPA_REPORT_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycles.hpp"
#include "gk_dim.hpp"
#include "graph.hpp"
#include "growth.hpp"
#include "order.hpp"
#include "rewrite.hpp"

namespace lpa {

  struct AnalysisReport {
    std::size_t                        vertex_count = 0;
    std::size_t                        edge_count   = 0;
    std::vector<std::string>           sinks;
    std::map<std::string, std::string> special;
    std::vector<std::string>           generator_order;
    std::vector<Cycle>                 cycles;
    bool                               cycles_disjoint = true;
    std::optional<ChainStats>          chain_stats;
    GrowthClass                        growth_class;
    std::optional<GrowthSequence>      growth;
    std::optional<GkEstimate>          estimate;
    ConfluenceReport                   confluence;
  };

  // `growth` is attached as given; the estimate needs at least 16 terms.
  inline AnalysisReport analyze(Graph const&                  g,
                                std::optional<GrowthSequence> growth = {}) {
    AnalysisReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count   = g.edge_count();
    for (auto v : g.sinks()) {
      r.sinks.push_back(g.name(v));
    }
    r.special = g.special_map();

    auto const rs = build_rules(g);
    for (std::uint32_t k = 0; k < rs.order().alphabet_size(); ++k) {
      r.generator_order.push_back(to_string(rs.order().generator(k), g));
    }
    r.cycles          = find_cycles(g);
    r.cycles_disjoint = cycles_pairwise_disjoint(g);
    r.growth_class    = classify(g);
    r.chain_stats     = r.growth_class.stats;
    if (growth) {
      if (growth->max_n() >= GkEstimateOptions{}.min_length) {
        r.estimate = estimate_gk(*growth);
      }
      r.growth = std::move(growth);
    }
    r.confluence = check_confluence(rs);
    return r;
  }

  namespace detail {
    inline nlohmann::ordered_json cycle_json(Cycle const& c, Graph const& g) {
      nlohmann::ordered_json j;
      j["vertices"] = nlohmann::ordered_json::array();
      for (auto v : c.vertices) {
        j["vertices"].push_back(g.name(v));
      }
      j["edges"] = nlohmann::ordered_json::array();
      for (auto e : c.edges) {
        j["edges"].push_back(g.name(e));
      }
      j["length"] = c.length();
      return j;
    }

    inline std::string cycle_text(Cycle const& c, Graph const& g) {
      std::string out = "(";
      for (std::size_t i = 0; i < c.edges.size(); ++i) {
        out += (i ? " " : "") + g.name(c.edges[i]);
      }
      return out + ")";
    }
  }  // namespace detail

  inline nlohmann::ordered_json to_json(AnalysisReport const& r,
                                        Graph const&          g) {
    using json = nlohmann::ordered_json;
    json j;
    j["graph"] = {{"vertices", r.vertex_count},
                  {"edges", r.edge_count},
                  {"sinks", r.sinks}};
    j["special"] = json::object();
    for (auto const& [v, e] : r.special) {
      j["special"][v] = e;
    }
    j["generator_order"] = r.generator_order;
    j["cycles"]          = json::array();
    for (auto const& c : r.cycles) {
      j["cycles"].push_back(detail::cycle_json(c, g));
    }
    j["cycles_disjoint"] = r.cycles_disjoint;
    if (r.chain_stats) {
      json cs;
      cs["d1"] = r.chain_stats->d1;
      cs["d2"] = r.chain_stats->d2;
      cs["witness_chain_d1"] = json::array();
      for (auto const& c : r.chain_stats->witness_chain_d1) {
        cs["witness_chain_d1"].push_back(detail::cycle_json(c, g));
      }
      cs["witness_chain_d2"] = json::array();
      for (auto const& c : r.chain_stats->witness_chain_d2) {
        cs["witness_chain_d2"].push_back(detail::cycle_json(c, g));
      }
      j["chain_stats"] = cs;
    } else {
      j["chain_stats"] = nullptr;
    }

    json gc;
    gc["kind"] = to_string(r.growth_class.kind);
    if (r.growth_class.gk) {
      gc["gk"] = *r.growth_class.gk;
      if (r.chain_stats && r.chain_stats->d1 == 0) {
        gc["note"] = "acyclic graph: 2*d1-1 = -1 is clamped, gk = 0";
      }
    }
    if (r.growth_class.witness) {
      auto const& w = *r.growth_class.witness;
      gc["witness"] = {{"p", to_string(w.p, g)},
                       {"q", to_string(w.q, g)},
                       {"shared_vertex", g.name(w.shared_vertex)}};
    }
    j["growth_class"] = gc;

    if (r.growth) {
      json rows = json::array();
      for (std::size_t n = 1; n <= r.growth->max_n(); ++n) {
        // exact integers as decimal strings
        rows.push_back({{"n", n}, {"g", r.growth->at(n).str()}});
      }
      j["growth"] = rows;
    }
    if (r.estimate) {
      j["estimate"] = {{"exponential", r.estimate->exponential},
                       {"degree", r.estimate->degree},
                       {"log_linear_slope", r.estimate->log_linear_slope}};
    }

    json conf;
    conf["confluent"]   = r.confluence.confluent;
    conf["ambiguities"] = r.confluence.ambiguities;
    conf["divergent_words"] = json::array();
    for (auto const& d : r.confluence.divergences) {
      conf["divergent_words"].push_back(to_string(d.word, g));
    }
    j["confluence"] = conf;
    return j;
  }

  inline std::string to_text(AnalysisReport const& r, Graph const& g) {
    std::ostringstream out;
    out << "vertices: " << r.vertex_count << "\n";
    out << "edges: " << r.edge_count << "\n";
    out << "sinks:";
    for (auto const& s : r.sinks) {
      out << ' ' << s;
    }
    out << "\nspecial edges:";
    for (auto const& [v, e] : r.special) {
      out << ' ' << v << "->" << e;
    }
    out << "\ngenerator order:";
    for (auto const& x : r.generator_order) {
      out << ' ' << x;
    }
    out << "\ncycles: " << r.cycles.size() << "\n";
    for (auto const& c : r.cycles) {
      out << "  " << detail::cycle_text(c, g) << "\n";
    }
    out << "cycles pairwise disjoint: " << (r.cycles_disjoint ? "yes" : "no")
        << "\n";
    if (r.chain_stats) {
      out << "d1: " << r.chain_stats->d1 << "\n";
      out << "d2: " << r.chain_stats->d2 << "\n";
    }
    out << "growth: " << to_string(r.growth_class.kind);
    if (r.growth_class.gk) {
      out << ", GK dimension " << *r.growth_class.gk;
      if (r.chain_stats && r.chain_stats->d1 == 0) {
        out << " (acyclic, clamped)";
      }
    }
    out << "\n";
    if (r.growth_class.witness) {
      auto const& w = *r.growth_class.witness;
      out << "free witness: p = " << to_string(w.p, g)
          << ", q = " << to_string(w.q, g) << " at "
          << g.name(w.shared_vertex) << "\n";
    }
    if (r.growth) {
      out << "growth table:\n";
      for (std::size_t n = 1; n <= r.growth->max_n(); ++n) {
        out << "  " << n << ' ' << r.growth->at(n).str() << "\n";
      }
    }
    if (r.estimate) {
      if (r.estimate->exponential) {
        out << "estimated growth: exponential\n";
      } else {
        out << "estimated degree: " << r.estimate->degree << "\n";
      }
    }
    out << "confluence: "
        << (r.confluence.confluent ? "Confluent" : "NOT confluent") << " ("
        << r.confluence.ambiguities << " ambiguities)\n";
    for (auto const& d : r.confluence.divergences) {
      out << "  unresolved: " << to_string(d.word, g) << "\n";
    }
    return out.str();
  }

}  // namespace lpa

#endif  // LPA_REPORT_HPP_
