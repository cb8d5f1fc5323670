#pragma once

#include <array>
#include <map>
#include <vector>

#include "filiform/bracket.hpp"
#include "filiform/quad_poly.hpp"

namespace filiform {

/// Jacobi residual [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; identically zero
/// exactly when the table defines a Lie bracket on the triple.
template <typename S>
BasicElement<S> jacobi_residual(const BasicElement<S>& x, const BasicElement<S>& y,
                                const BasicElement<S>& z, const BasicTable<S>& table) {
  BasicElement<S> r = bracket(x, bracket(y, z, table), table);
  r += bracket(y, bracket(z, x, table), table);
  r += bracket(z, bracket(x, y, table), table);
  return r;
}

/// Nonzero Jacobi residuals at truncation N, keyed by the basis triple
/// (0 encodes a). Absent key = residual zero; empty report = the table
/// defines a Lie algebra modulo L^{N+1}.
struct ResidualReport {
  int trunc = 0;
  std::map<std::array<int, 3>, Element> violations;

  bool ok() const { return violations.empty(); }
};

/// Evaluates every triple (a, e_i, e_j), i < j <= N and (e_i, e_j, e_k),
/// i < j < k <= N. Requires N >= 3.
ResidualReport jacobi_check(const ParamTable& table, int n);

/// Same sweep with early exit; true iff the report would be empty.
bool jacobi_holds(const ParamTable& table, int n);

/// Restriction of a report to truncation m: drops triples above m and
/// residual components above m (triples whose residual dies become absent).
ResidualReport restrict_to(const ResidualReport& report, int m);

using SymTable = BasicTable<QuadPoly>;
using SymElement = BasicElement<QuadPoly>;

/// Table whose (j, s) entry is the formal variable x_{js}, over all
/// positions visible at truncation n (2j+1+s <= n).
SymTable symbolic_table(int n);

/// The quadratic conditions on (lambda_{js}) equivalent to the Jacobi
/// identity modulo L^{N+1}: every coefficient of every symbolic residual,
/// deduplicated, in a deterministic order.
std::vector<QuadPoly> jacobi_polynomials(int n);

}  // namespace filiform
