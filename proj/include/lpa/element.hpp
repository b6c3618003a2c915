// Finite linear combinations of words with exact rational coefficients.

#ifndef LPA_ELEMENT_HPP_
#define LPA_ELEMENT_HPP_

#include <cstddef>
#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "order.hpp"

namespace lpa {

  using BigInt      = boost::multiprecision::cpp_int;
  using Coefficient = boost::multiprecision::cpp_rational;

  // Never stores a zero coefficient; the zero element has no terms.
  class AlgebraElement {
   public:
    using Terms = std::map<Monomial, Coefficient>;

    AlgebraElement() = default;

    explicit AlgebraElement(Monomial m, Coefficient c = 1) {
      add(std::move(m), c);
    }

    static AlgebraElement zero() { return {}; }

    void add(Monomial const& m, Coefficient const& c) {
      if (c == 0) {
        return;
      }
      auto [it, inserted] = _terms.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }

    Terms const& terms() const noexcept { return _terms; }
    bool         is_zero() const noexcept { return _terms.empty(); }
    std::size_t  size() const noexcept { return _terms.size(); }

    Coefficient coefficient(Monomial const& m) const {
      auto it = _terms.find(m);
      return it == _terms.end() ? Coefficient(0) : it->second;
    }

    AlgebraElement& operator+=(AlgebraElement const& that) {
      for (auto const& [m, c] : that._terms) {
        add(m, c);
      }
      return *this;
    }

    AlgebraElement& operator-=(AlgebraElement const& that) {
      for (auto const& [m, c] : that._terms) {
        add(m, -c);
      }
      return *this;
    }

    AlgebraElement& operator*=(Coefficient const& s) {
      if (s == 0) {
        _terms.clear();
      } else {
        for (auto& [m, c] : _terms) {
          c *= s;
        }
      }
      return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
      return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
      return a -= b;
    }
    friend AlgebraElement operator*(Coefficient const& s, AlgebraElement a) {
      return a *= s;
    }
    friend AlgebraElement operator-(AlgebraElement a) { return a *= -1; }

    bool operator==(AlgebraElement const&) const = default;

   private:
    Terms _terms;
  };

  // Bilinear extension of word concatenation, without reduction.
  inline AlgebraElement concat(AlgebraElement const& x,
                               AlgebraElement const& y) {
    AlgebraElement out;
    for (auto const& [a, ca] : x.terms()) {
      for (auto const& [b, cb] : y.terms()) {
        out.add(a * b, ca * cb);
      }
    }
    return out;
  }

  // Letterwise adjoint of every word, without reduction.
  inline AlgebraElement star(AlgebraElement const& x) {
    AlgebraElement out;
    for (auto const& [m, c] : x.terms()) {
      out.add(m.adjoint(), c);
    }
    return out;
  }

  inline bool has_integer_coefficients(AlgebraElement const& x) {
    for (auto const& [m, c] : x.terms()) {
      if (boost::multiprecision::denominator(c) != 1) {
        return false;
      }
    }
    return true;
  }

}  // namespace lpa

#endif  // LPA_ELEMENT_HPP_
