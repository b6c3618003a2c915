// On-disk cache of growth sequences, one CSV file per graph, keyed by a
// digest of the graph document together with its resolved special edges.

#ifndef LPA_GROWTH_CACHE_HPP_
#define LPA_GROWTH_CACHE_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "graph.hpp"
#include "growth.hpp"

namespace lpa {

  // FNV-1a, 64 bit.
  inline std::uint64_t fnv1a(std::string const& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  inline std::string graph_digest(std::string const& document, Graph const& g) {
    std::string key = document;
    key += '\0';
    for (auto const& [v, e] : g.special_map()) {
      key += v;
      key += '\0';
      key += e;
      key += '\0';
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << fnv1a(key);
    return out.str();
  }

  // Header "n,g", then one row per n.
  inline void write_growth_csv(std::ostream& out, GrowthSequence const& seq) {
    out << "n,g\n";
    for (std::size_t n = 1; n <= seq.max_n(); ++n) {
      out << n << ',' << seq.at(n).str() << '\n';
    }
  }

  inline std::optional<GrowthSequence> read_growth_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "n,g") {
      return std::nullopt;
    }
    GrowthSequence seq;
    while (std::getline(in, line)) {
      auto comma = line.find(',');
      if (comma == std::string::npos
          || line.substr(0, comma) != std::to_string(seq.max_n() + 1)) {
        return std::nullopt;
      }
      try {
        seq.counts.emplace_back(line.substr(comma + 1));
      } catch (std::exception const&) {
        return std::nullopt;
      }
    }
    return seq;
  }

  class GrowthCache {
   public:
    explicit GrowthCache(std::filesystem::path dir) : _dir(std::move(dir)) {}

    // g(1..max_n) from the cache when a long enough sequence is stored,
    // otherwise computed and stored.
    GrowthSequence get(std::string const& document,
                       Graph const&       g,
                       std::size_t        max_n,
                       bool*              hit = nullptr) const {
      auto const path = file_for(document, g);
      if (std::ifstream in(path); in) {
        if (auto seq = read_growth_csv(in); seq && seq->max_n() >= max_n) {
          seq->counts.resize(max_n);
          if (hit) {
            *hit = true;
          }
          return *seq;
        }
      }
      auto seq = growth_sequence(g, max_n);
      std::filesystem::create_directories(_dir);
      auto          tmp = path;
      tmp += ".tmp";
      {
        std::ofstream out(tmp);
        write_growth_csv(out, seq);
      }
      std::filesystem::rename(tmp, path);
      if (hit) {
        *hit = false;
      }
      return seq;
    }

    std::filesystem::path file_for(std::string const& document,
                                   Graph const&       g) const {
      return _dir / (graph_digest(document, g) + ".csv");
    }

   private:
    std::filesystem::path _dir;
  };

}  // namespace lpa

#endif  // LPA_GROWTH_CACHE_HPP_
