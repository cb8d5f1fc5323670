#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "filiform/bracket.hpp"

namespace filiform {

/// Reduced echelon basis of a subspace of L / L^{N+1}, coordinates ordered
/// a, e_1, ..., e_N; deterministic for a given subspace.
using SpanBasis = std::vector<Element>;

/// Derived series of the truncated algebra: D_1 = everything,
/// D_{next} = [D, D], listed until the zero subspace (always reached here,
/// since bracketing strictly raises degree).
std::vector<SpanBasis> derived_series(const ParamTable& table, int n);

struct AbelianCheck {
  bool abelian = false;
  std::optional<std::pair<int, int>> witness;  // first nonzero [e_i, e_j], i < j
};

/// Whether span{e_k, ..., e_N} brackets to zero; requires 2 <= k <= N.
AbelianCheck is_abelian_from(const ParamTable& table, int n, int k);

}  // namespace filiform
