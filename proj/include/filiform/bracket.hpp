#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "filiform/element.hpp"
#include "filiform/param_table.hpp"

namespace filiform {

/// ad_a: a -> 0, e_i -> e_{i+1}, truncation dropping what falls out.
template <typename S>
BasicElement<S> ad_a(const BasicElement<S>& x) {
  BasicElement<S> r(x.trunc);
  for (const auto& [i, v] : x.coeffs_e) r.add_e(i + 1, v);
  return r;
}

/// Bracket of two basis symbols (0 = a, i >= 1 = e_i) at truncation n.
///
///   [a, e_j]   = e_{j+1}
///   [e_k, e_m] = sum_{s>=1, 0 <= j-k <= m-j-1}
///                  (-1)^{j-k} C(m-j-1, j-k) lambda_{js} e_{m+k+s}   (k < m)
///
/// which for m = k+1 collapses to the defining relation
/// [e_k, e_{k+1}] = sum_s lambda_{ks} e_{2k+1+s}.
template <typename S>
BasicElement<S> bracket_basis(int k, int m, const BasicTable<S>& table, int n) {
  if (k < 0 || k > n || m < 0 || m > n)
    throw std::domain_error("bracket_basis: index out of range 1..N");
  if (k == m) return BasicElement<S>::zero(n);
  if (k > m) return -bracket_basis(m, k, table, n);

  BasicElement<S> r(n);
  if (k == symbol_a) {
    r.add_e(m + 1, S(Rational(1)));
    return r;
  }
  for (int j = k; 2 * j <= m + k - 1; ++j) {
    Rational c = binomial(static_cast<unsigned long>(m - j - 1),
                          static_cast<unsigned long>(j - k));
    if ((j - k) % 2 != 0) c = -c;
    for (auto it = table.row_begin(j); it != table.row_end(j); ++it) {
      const int s = it->first.second;
      if (m + k + s > n) break;
      r.add_e(m + k + s, it->second * c);
    }
  }
  return r;
}

/// Bilinear antisymmetric extension of bracket_basis to whole elements.
template <typename S>
BasicElement<S> bracket(const BasicElement<S>& x, const BasicElement<S>& y,
                        const BasicTable<S>& table) {
  if (x.trunc != y.trunc) throw std::domain_error("bracket: mismatched truncations");
  const int n = x.trunc;
  BasicElement<S> r(n);

  auto accumulate = [&](int sx, const S& cx, int sy, const S& cy) {
    if (sx == sy) return;
    r += bracket_basis(sx, sy, table, n).scaled(cx * cy);
  };

  if (!x.coeff_a.is_zero()) {
    for (const auto& [j, cy] : y.coeffs_e) accumulate(symbol_a, x.coeff_a, j, cy);
  }
  if (!y.coeff_a.is_zero()) {
    for (const auto& [i, cx] : x.coeffs_e) accumulate(i, cx, symbol_a, y.coeff_a);
  }
  for (const auto& [i, cx] : x.coeffs_e)
    for (const auto& [j, cy] : y.coeffs_e) accumulate(i, cx, j, cy);
  return r;
}

/// Independent evaluator for [e_k, e_m], k < m: downward recursion on the
/// gap m - k through the rearrangement
///
///   [e_k, e_m] = [e_k, [a, e_{m-1}]] = -[e_{k+1}, e_{m-1}] + [a, [e_k, e_{m-1}]]
///
/// seeded only by the defining consecutive brackets. Never consults the
/// closed form above, so equality with bracket_basis is a real check.
template <typename S>
class BracketOracle {
public:
  BracketOracle(const BasicTable<S>& table, int n) : table_(&table), n_(n) {}

  BasicElement<S> operator()(int k, int m) {
    if (k < 1 || m > n_ || k >= m)
      throw std::domain_error("bracket oracle: need 1 <= k < m <= N");
    return get(k, m);
  }

private:
  const BasicElement<S>& get(int k, int m) {
    auto it = memo_.find({k, m});
    if (it != memo_.end()) return it->second;

    BasicElement<S> r(n_);
    if (m == k + 1) {
      for (auto row = table_->row_begin(k); row != table_->row_end(k); ++row)
        r.add_e(2 * k + 1 + row->first.second, row->second);
    } else {
      r = ad_a(get(k, m - 1));
      if (k + 1 < m - 1) r -= get(k + 1, m - 1);
    }
    return memo_.emplace(std::pair{k, m}, std::move(r)).first->second;
  }

  const BasicTable<S>* table_;
  int n_;
  std::map<std::pair<int, int>, BasicElement<S>> memo_;
};

template <typename S>
BasicElement<S> bracket_basis_oracle(int k, int m, const BasicTable<S>& table, int n) {
  BracketOracle<S> oracle(table, n);
  return oracle(k, m);
}

}  // namespace filiform
