#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "filiform/rational.hpp"

namespace filiform {

/// Basis symbols are encoded as int: 0 is a, i >= 1 is e_i.
inline constexpr int symbol_a = 0;

/// A vector in span{a, e_1, ..., e_N}, i.e. the quotient L / L^{N+1}.
/// Zero coefficients are never stored and every stored index is <= trunc.
/// Components pushed past the truncation are silently dropped: all
/// arithmetic happens in the quotient.
template <typename Scalar>
struct BasicElement {
  int trunc = 1;
  Scalar coeff_a{};
  std::map<int, Scalar> coeffs_e;

  explicit BasicElement(int n) : trunc(n) {
    if (n < 1) throw std::domain_error("Element: truncation must be >= 1");
  }

  static BasicElement zero(int n) { return BasicElement(n); }

  static BasicElement basis(int symbol, int n) {
    BasicElement r(n);
    if (symbol == symbol_a)
      r.coeff_a = Scalar(Rational(1));
    else if (symbol >= 1 && symbol <= n)
      r.coeffs_e.emplace(symbol, Scalar(Rational(1)));
    else
      throw std::domain_error("Element: basis index out of range 1..N");
    return r;
  }

  bool is_zero() const { return coeff_a.is_zero() && coeffs_e.empty(); }

  Scalar coeff_e(int i) const {
    auto it = coeffs_e.find(i);
    return it == coeffs_e.end() ? Scalar{} : it->second;
  }

  void add_a(const Scalar& v) {
    coeff_a += v;
  }

  void add_e(int i, const Scalar& v) {
    if (i < 1) throw std::domain_error("Element: index must be >= 1");
    if (i > trunc || v.is_zero()) return;
    auto [it, inserted] = coeffs_e.emplace(i, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) coeffs_e.erase(it);
    }
  }

  BasicElement& operator+=(const BasicElement& o) {
    require_same_trunc(o);
    coeff_a += o.coeff_a;
    for (const auto& [i, v] : o.coeffs_e) add_e(i, v);
    return *this;
  }

  BasicElement& operator-=(const BasicElement& o) {
    require_same_trunc(o);
    coeff_a -= o.coeff_a;
    for (const auto& [i, v] : o.coeffs_e) add_e(i, -v);
    return *this;
  }

  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }

  BasicElement operator-() const {
    BasicElement r(trunc);
    r.coeff_a = -coeff_a;
    for (const auto& [i, v] : coeffs_e) r.coeffs_e.emplace(i, -v);
    return r;
  }

  template <typename Factor>
  BasicElement scaled(const Factor& f) const {
    BasicElement r(trunc);
    Scalar fa = coeff_a * f;
    if (!fa.is_zero()) r.coeff_a = std::move(fa);
    for (const auto& [i, v] : coeffs_e) {
      Scalar fv = v * f;
      if (!fv.is_zero()) r.coeffs_e.emplace(i, std::move(fv));
    }
    return r;
  }

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.trunc == b.trunc && a.coeff_a == b.coeff_a && a.coeffs_e == b.coeffs_e;
  }

private:
  void require_same_trunc(const BasicElement& o) const {
    if (trunc != o.trunc) throw std::domain_error("Element: mismatched truncations");
  }
};

/// Image of x in the smaller quotient L / L^{M+1}; requires m <= x.trunc.
template <typename Scalar>
BasicElement<Scalar> restrict_to(const BasicElement<Scalar>& x, int m) {
  if (m > x.trunc) throw std::domain_error("Element: cannot restrict upward");
  BasicElement<Scalar> r(m);
  r.coeff_a = x.coeff_a;
  for (const auto& [i, v] : x.coeffs_e)
    if (i <= m) r.coeffs_e.emplace(i, v);
  return r;
}

using Element = BasicElement<Rational>;

/// "2 a + e_1 - 1/6 e_4", or "0" for the zero element.
std::string to_string(const Element& x);
std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace filiform
