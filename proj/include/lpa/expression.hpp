// Text syntax for algebra elements.
//
//   expression := term (('+' | '-') term)*
//   term       := [integer | integer '/' integer] factor ('.' factor)*
//   factor     := identifier ['*']
//
// A leading '-' is allowed, and "0" alone denotes the zero element.
// Example: "2 e.f* - v".

#ifndef LPA_EXPRESSION_HPP_
#define LPA_EXPRESSION_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "element.hpp"
#include "graph.hpp"
#include "order.hpp"
#include "rewrite.hpp"

namespace lpa {

  class ExpressionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  namespace detail {
    class ExpressionParser {
     public:
      ExpressionParser(std::string_view text, Graph const& g)
          : _text(text), _graph(g) {}

      AlgebraElement parse() {
        skip_space();
        if (peek() == '0' && rest_is_space(_pos + 1)) {
          return {};
        }
        AlgebraElement out;
        Coefficient    sign = 1;
        if (peek() == '-') {
          ++_pos;
          sign = -1;
        } else if (peek() == '+') {
          ++_pos;
        }
        while (true) {
          auto [m, c] = term();
          out.add(m, sign * c);
          skip_space();
          if (at_end()) {
            break;
          }
          char op = _text[_pos];
          if (op != '+' && op != '-') {
            fail("expected '+' or '-'");
          }
          ++_pos;
          sign = op == '-' ? -1 : 1;
        }
        return out;
      }

     private:
      std::pair<Monomial, Coefficient> term() {
        skip_space();
        Coefficient c = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          auto num = digits();
          c        = Coefficient(BigInt(num));
          skip_space();
          if (peek() == '/') {
            ++_pos;
            skip_space();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
              fail("expected a denominator");
            }
            BigInt den(digits());
            if (den == 0) {
              fail("zero denominator");
            }
            c /= Coefficient(den);
          }
        }
        Monomial m;
        m.letters.push_back(factor());
        while (true) {
          skip_space();
          if (peek() != '.') {
            break;
          }
          ++_pos;
          m.letters.push_back(factor());
        }
        return {std::move(m), c};
      }

      Generator factor() {
        skip_space();
        auto start = _pos;
        while (!at_end()
               && (std::isalnum(static_cast<unsigned char>(_text[_pos]))
                   || _text[_pos] == '_')) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected an identifier");
        }
        std::string id(_text.substr(start, _pos - start));
        skip_space();
        bool starred = peek() == '*';
        if (starred) {
          ++_pos;
        }
        if (auto e = _graph.find_edge(id)) {
          return starred ? Generator::star(*e) : Generator::edge(*e);
        }
        if (auto v = _graph.find_vertex(id)) {
          if (starred) {
            fail("vertex '" + id + "' cannot be starred");
          }
          return Generator::vertex(*v);
        }
        throw ExpressionError("unknown identifier '" + id + "' in expression");
      }

      std::string digits() {
        auto start = _pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
        return std::string(_text.substr(start, _pos - start));
      }

      bool at_end() const { return _pos >= _text.size(); }
      char peek() const { return at_end() ? '\0' : _text[_pos]; }

      bool rest_is_space(std::size_t from) const {
        return std::all_of(_text.begin() + from, _text.end(), [](char ch) {
          return std::isspace(static_cast<unsigned char>(ch));
        });
      }

      void skip_space() {
        while (std::isspace(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ExpressionError(what + " at offset " + std::to_string(_pos)
                              + " in expression '" + std::string(_text) + "'");
      }

      std::string_view _text;
      Graph const&     _graph;
      std::size_t      _pos = 0;
    };
  }  // namespace detail

  inline AlgebraElement parse_expression(std::string_view text,
                                         Graph const&     g) {
    return detail::ExpressionParser(text, g).parse();
  }

  // Terms in increasing length-lex order; parse_expression reads it back.
  inline std::string format_element(AlgebraElement const& x,
                                    Graph const&          g,
                                    OrderContext const&   ctx) {
    if (x.is_zero()) {
      return "0";
    }
    std::vector<std::pair<Monomial, Coefficient>> terms(x.terms().begin(),
                                                        x.terms().end());
    std::sort(terms.begin(), terms.end(), [&](auto const& a, auto const& b) {
      return ctx.compare(a.first, b.first) < 0;
    });
    std::string out;
    bool        first = true;
    for (auto const& [m, c] : terms) {
      bool        negative = c < 0;
      Coefficient mag      = negative ? Coefficient(-c) : c;
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mag != 1) {
        out += mag.str() + " ";
      }
      out += to_string(m, g);
      first = false;
    }
    return out;
  }

  inline std::string format_element(AlgebraElement const& x,
                                    RuleSet const&        rs) {
    return format_element(x, rs.graph(), rs.order());
  }

}  // namespace lpa

#endif  // LPA_EXPRESSION_HPP_
