// Growth classification of a Leavitt path algebra from its graph.

#ifndef LPA_GK_DIM_HPP_
#define LPA_GK_DIM_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>

#include "cycles.hpp"
#include "graph.hpp"
#include "growth.hpp"

namespace lpa {

  enum class GrowthKind { Exponential, Polynomial };

  inline char const* to_string(GrowthKind k) {
    return k == GrowthKind::Exponential ? "Exponential" : "Polynomial";
  }

  struct GrowthClass {
    GrowthKind                 kind = GrowthKind::Polynomial;
    std::optional<std::size_t> gk;
    std::optional<ChainStats>  stats;
    std::optional<FreeWitness> witness;
  };

  // max(2 d1 - 1, 2 d2), clamped at 0 for acyclic graphs (d1 = 0).
  inline std::size_t gk_formula(std::size_t d1, std::size_t d2) {
    std::size_t const odd = d1 == 0 ? 0 : 2 * d1 - 1;
    return std::max(odd, 2 * d2);
  }

  // Exponential when two distinct cycles share a vertex; otherwise polynomial
  // of degree max(2 d1 - 1, 2 d2).
  inline GrowthClass classify(Graph const& g) {
    GrowthClass out;
    if (!cycles_pairwise_disjoint(g)) {
      out.kind    = GrowthKind::Exponential;
      out.witness = free_witness(g);
      return out;
    }
    out.kind  = GrowthKind::Polynomial;
    out.stats = chain_stats(g);
    out.gk    = gk_formula(out.stats->d1, out.stats->d2);
    return out;
  }

}  // namespace lpa

#endif  // LPA_GK_DIM_HPP_
