// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it in-process.

#ifndef LPA_TOOLS_CLI_HPP_
#define LPA_TOOLS_CLI_HPP_

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lpa/lpa.hpp"

namespace lpa::cli {

  inline constexpr int exit_ok            = 0;
  inline constexpr int exit_error         = 1;
  inline constexpr int exit_not_confluent = 2;

  namespace detail {
    inline GrowthSequence growth_for(std::string const& document,
                                     Graph const&       g,
                                     std::size_t        max_n,
                                     std::string const& cache_dir) {
      std::string dir = cache_dir;
      if (dir.empty()) {
        if (char const* env = std::getenv("LPA_CACHE_DIR")) {
          dir = env;
        }
      }
      if (dir.empty()) {
        return growth_sequence(g, max_n);
      }
      return GrowthCache(dir).get(document, g, max_n);
    }

    inline void print_estimate(std::ostream& out, GrowthSequence const& seq) {
      if (seq.max_n() < GkEstimateOptions{}.min_length) {
        out << "# estimate: needs at least " << GkEstimateOptions{}.min_length
            << " terms\n";
        return;
      }
      auto est = estimate_gk(seq);
      if (est.exponential) {
        out << "# estimate: exponential (log-linear slope "
            << est.log_linear_slope << ")\n";
      } else {
        out << "# estimate: degree " << est.degree << "\n";
      }
    }
  }  // namespace detail

  inline int run(std::vector<std::string> args,
                 std::ostream&            out,
                 std::ostream&            err) {
    CLI::App app{"Leavitt path algebras of finite graphs: normal forms, "
                 "growth and Gelfand-Kirillov dimension"};
    app.require_subcommand(1);

    std::string file, format = "json", expr, csv_path, cache_dir;
    std::size_t growth_n = 0, max_n = 0;

    auto* analyze = app.add_subcommand("analyze", "full analysis report");
    analyze->add_option("file", file, "graph file")->required();
    analyze->add_option("--growth-n", growth_n, "attach g(1..N)");
    analyze->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--cache-dir", cache_dir, "growth cache directory");

    auto* growth = app.add_subcommand("growth", "growth function table");
    growth->add_option("file", file, "graph file")->required();
    growth->add_option("--max-n", max_n, "largest word length")
        ->required()
        ->check(CLI::PositiveNumber);
    growth->add_option("--csv", csv_path, "also write the table here");
    growth->add_option("--cache-dir", cache_dir, "growth cache directory");

    auto* reduce_cmd = app.add_subcommand("reduce", "normal form of an element");
    reduce_cmd->add_option("file", file, "graph file")->required();
    reduce_cmd->add_option("--expr", expr, "element, e.g. \"2 e.f* - v\"")
        ->required();

    auto* basis = app.add_subcommand("basis", "basis words up to a length");
    basis->add_option("file", file, "graph file")->required();
    basis->add_option("--max-n", max_n, "largest word length")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "confluence of the rules");
    check->add_option("file", file, "graph file")->required();

    auto* witness = app.add_subcommand("witness", "free subalgebra witness");
    witness->add_option("file", file, "graph file")->required();

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_error;
    }

    try {
      auto const document = read_file(file);
      auto const g        = parse_graph(document);

      if (analyze->parsed()) {
        std::optional<GrowthSequence> seq;
        if (growth_n > 0) {
          seq = detail::growth_for(document, g, growth_n, cache_dir);
        }
        auto report = lpa::analyze(g, std::move(seq));
        if (format == "json") {
          out << to_json(report, g).dump(2) << "\n";
        } else {
          out << to_text(report, g);
        }
      } else if (growth->parsed()) {
        auto seq = detail::growth_for(document, g, max_n, cache_dir);
        write_growth_csv(out, seq);
        detail::print_estimate(out, seq);
        if (!csv_path.empty()) {
          std::ofstream f(csv_path);
          if (!f) {
            err << "error: cannot write '" << csv_path << "'\n";
            return exit_error;
          }
          write_growth_csv(f, seq);
        }
      } else if (reduce_cmd->parsed()) {
        auto const rs = build_rules(g);
        out << format_element(reduce(parse_expression(expr, g), rs), rs)
            << "\n";
      } else if (basis->parsed()) {
        for (auto const& m : enumerate_basis(g, max_n, word_budget())) {
          out << to_string(m, g) << "\n";
        }
      } else if (check->parsed()) {
        auto const rs     = build_rules(g);
        auto const report = check_confluence(rs);
        if (report.confluent) {
          out << "Confluent (" << report.ambiguities << " ambiguities, "
              << rs.size() << " rules)\n";
          return exit_ok;
        }
        out << "Not confluent: " << report.divergences.size() << " of "
            << report.ambiguities << " ambiguities unresolved\n";
        for (auto const& d : report.divergences) {
          out << "  " << to_string(d.word, g) << ": "
              << format_element(d.via_first, rs) << " vs "
              << format_element(d.via_second, rs) << "\n";
        }
        return exit_not_confluent;
      } else if (witness->parsed()) {
        if (auto w = free_witness(g)) {
          out << "p = " << to_string(w->p, g) << ", q = " << to_string(w->q, g)
              << ", vertex " << g.name(w->shared_vertex) << "\n";
        } else {
          out << "none\n";
        }
      }
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return exit_error;
    }
    return exit_ok;
  }

}  // namespace lpa::cli

#endif  // LPA_TOOLS_CLI_HPP_
