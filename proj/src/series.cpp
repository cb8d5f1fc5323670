#include "filiform/series.hpp"

#include <map>
#include <stdexcept>

namespace filiform {

namespace {

// Dense coordinates [a, e_1, ..., e_N].
std::vector<Rational> to_coords(const Element& x) {
  std::vector<Rational> v(static_cast<std::size_t>(x.trunc) + 1);
  v[0] = x.coeff_a;
  for (const auto& [i, c] : x.coeffs_e) v[static_cast<std::size_t>(i)] = c;
  return v;
}

Element from_coords(const std::vector<Rational>& v, int n) {
  Element x(n);
  x.coeff_a = v[0];
  for (int i = 1; i <= n; ++i)
    if (!v[static_cast<std::size_t>(i)].is_zero())
      x.coeffs_e.emplace(i, v[static_cast<std::size_t>(i)]);
  return x;
}

// Reduced echelon form maintained incrementally, keyed by pivot column.
class Echelon {
public:
  void insert(std::vector<Rational> v) {
    for (std::size_t col = 0; col < v.size(); ++col) {
      if (v[col].is_zero()) continue;
      auto it = rows_.find(col);
      if (it != rows_.end()) {
        const Rational f = v[col];
        for (std::size_t c = col; c < v.size(); ++c) v[c] -= f * it->second[c];
        continue;
      }
      const Rational inv = Rational(1) / v[col];
      for (std::size_t c = col; c < v.size(); ++c) v[c] *= inv;
      for (auto& [p, row] : rows_) {
        if (row[col].is_zero()) continue;
        const Rational f = row[col];
        for (std::size_t c = col; c < v.size(); ++c) row[c] -= f * v[c];
      }
      rows_.emplace(col, std::move(v));
      return;
    }
  }

  SpanBasis basis(int n) const {
    SpanBasis out;
    for (const auto& [p, row] : rows_) out.push_back(from_coords(row, n));
    return out;
  }

  std::size_t dim() const { return rows_.size(); }

private:
  std::map<std::size_t, std::vector<Rational>> rows_;
};

}  // namespace

std::vector<SpanBasis> derived_series(const ParamTable& table, int n) {
  SpanBasis current;
  current.push_back(Element::basis(symbol_a, n));
  for (int i = 1; i <= n; ++i) current.push_back(Element::basis(i, n));

  std::vector<SpanBasis> series{current};
  while (!current.empty()) {
    Echelon ech;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        Element b = bracket(current[i], current[j], table);
        if (!b.is_zero()) ech.insert(to_coords(b));
      }
    SpanBasis next = ech.basis(n);
    if (next.size() >= current.size())
      throw std::logic_error("derived_series: span failed to shrink");
    series.push_back(next);
    current = std::move(next);
  }
  return series;
}

AbelianCheck is_abelian_from(const ParamTable& table, int n, int k) {
  if (k < 2 || k > n) throw std::domain_error("is_abelian_from: need 2 <= k <= N");
  for (int i = k; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!bracket_basis(i, j, table, n).is_zero()) return {false, std::pair{i, j}};
  return {true, std::nullopt};
}

}  // namespace filiform
