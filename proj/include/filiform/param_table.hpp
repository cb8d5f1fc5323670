#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "filiform/rational.hpp"

namespace filiform {

/// Sparse deformation parameter table (j, s) -> lambda_{js}, j, s >= 1.
/// Row j feeds the defining bracket [e_j, e_{j+1}] = sum_s lambda_{js} e_{2j+1+s}.
/// Tables are truncation-independent data: entries invisible at some
/// truncation are kept and simply never contribute there.
template <typename Scalar>
struct BasicTable {
  using Key = std::pair<int, int>;
  std::map<Key, Scalar> entries;

  void set(int j, int s, Scalar v) {
    if (j < 1 || s < 1) throw std::domain_error("ParamTable: indices must be >= 1");
    if (v.is_zero())
      entries.erase({j, s});
    else
      entries.insert_or_assign({j, s}, std::move(v));
  }

  Scalar get(int j, int s) const {
    auto it = entries.find({j, s});
    return it == entries.end() ? Scalar{} : it->second;
  }

  bool empty() const { return entries.empty(); }

  /// Iterators spanning row j, in increasing s.
  auto row_begin(int j) const { return entries.lower_bound({j, 1}); }
  auto row_end(int j) const { return entries.lower_bound({j + 1, 1}); }

  bool row_empty(int j) const { return row_begin(j) == row_end(j); }

  friend bool operator==(const BasicTable& a, const BasicTable& b) {
    return a.entries == b.entries;
  }
};

using ParamTable = BasicTable<Rational>;

/// Sparse sequence s -> lambda_s for the metabelian family: row 1 of a
/// table, all other rows zero.
struct MetabelianSeq {
  std::map<int, Rational> entries;

  void set(int s, Rational v) {
    if (s < 1) throw std::domain_error("MetabelianSeq: index must be >= 1");
    if (v.is_zero())
      entries.erase(s);
    else
      entries.insert_or_assign(s, std::move(v));
  }

  Rational get(int s) const {
    auto it = entries.find(s);
    return it == entries.end() ? Rational(0) : it->second;
  }

  bool empty() const { return entries.empty(); }

  /// Smallest index with a nonzero entry at index <= bound, if any.
  std::optional<int> first_index(int bound) const {
    for (const auto& [s, v] : entries) {
      if (s > bound) break;
      return s;
    }
    return std::nullopt;
  }

  /// Entries with index <= bound.
  MetabelianSeq restricted(int bound) const {
    MetabelianSeq r;
    for (const auto& [s, v] : entries)
      if (s <= bound) r.entries.emplace(s, v);
    return r;
  }

  friend bool operator==(const MetabelianSeq& a, const MetabelianSeq& b) {
    return a.entries == b.entries;
  }
};

}  // namespace filiform
