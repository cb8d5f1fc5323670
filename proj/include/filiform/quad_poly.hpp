#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "filiform/param_table.hpp"
#include "filiform/rational.hpp"

namespace filiform {

/// One formal deformation parameter x_{js}.
using VarRef = std::pair<int, int>;

/// Product of at most two variables, kept sorted; empty means the constant 1.
using Monomial = std::vector<VarRef>;

/// Sparse polynomial of degree <= 2 in the variables x_{js}, exactly the
/// shape a Jacobi residual coefficient can take.
struct QuadPoly {
  std::map<Monomial, Rational> terms;

  QuadPoly() = default;
  QuadPoly(Rational c) {  // NOLINT: constants convert implicitly
    if (!c.is_zero()) terms.emplace(Monomial{}, std::move(c));
  }

  static QuadPoly variable(int j, int s) {
    if (j < 1 || s < 1) throw std::domain_error("QuadPoly: variable indices must be >= 1");
    QuadPoly p;
    p.terms.emplace(Monomial{{j, s}}, Rational(1));
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, static_cast<int>(m.size()));
    return d;
  }

  void add_term(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.size() > 2) throw std::domain_error("QuadPoly: degree above 2");
    auto [it, inserted] = terms.emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  QuadPoly& operator+=(const QuadPoly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  QuadPoly& operator-=(const QuadPoly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
  friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }

  QuadPoly operator-() const {
    QuadPoly r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
  }

  friend QuadPoly operator*(const QuadPoly& a, const Rational& c) {
    QuadPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : a.terms) r.terms.emplace(m, v * c);
    return r;
  }

  friend QuadPoly operator*(const QuadPoly& a, const QuadPoly& b) {
    QuadPoly r;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        Monomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        std::sort(m.begin(), m.end());
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }

  /// Substitutes table values for the variables (absent entries are zero).
  Rational eval(const ParamTable& table) const {
    Rational total(0);
    for (const auto& [m, c] : terms) {
      Rational v = c;
      for (const auto& [j, s] : m) v *= table.get(j, s);
      total += v;
    }
    return total;
  }

  friend bool operator==(const QuadPoly& a, const QuadPoly& b) { return a.terms == b.terms; }

  /// Deterministic total order (term-by-term lexicographic).
  friend bool operator<(const QuadPoly& a, const QuadPoly& b) {
    return std::lexicographical_compare(
        a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(),
        [](const auto& x, const auto& y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }
};

/// "x(1,1)*x(2,3) - 2 x(2,4)^2", or "0".
std::string to_string(const QuadPoly& p);

}  // namespace filiform
