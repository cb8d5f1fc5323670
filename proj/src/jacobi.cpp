#include "filiform/jacobi.hpp"

#include <set>
#include <stdexcept>

namespace filiform {

namespace {

// Shared sweep over all basis triples. Pair brackets [e_i, e_j], i < j are
// computed once; the residual of (e_i, e_j, e_k) is assembled as
//   [e_i, C(j,k)] - [e_j, C(i,k)] + [e_k, C(i,j)]
// and the residual of (a, e_i, e_j) as
//   ad_a(C(i,j)) - [e_i, e_{j+1}] + [e_j, e_{i+1}]
// with out-of-truncation shifts contributing nothing. The visitor gets
// each triple's residual and returns false to stop the sweep.
template <typename S, typename Visit>
void sweep_triples(const BasicTable<S>& table, int n, Visit visit) {
  if (n < 3) throw std::domain_error("jacobi: need N >= 3");

  std::map<std::pair<int, int>, BasicElement<S>> pair;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) pair.emplace(std::pair{i, j}, bracket_basis(i, j, table, n));
  auto pb = [&](int i, int j) -> const BasicElement<S>& { return pair.at({i, j}); };

  auto basis = [&](int i) { return BasicElement<S>::basis(i, n); };

  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      BasicElement<S> r = ad_a(pb(i, j));
      if (j + 1 <= n) r -= bracket_basis(i, j + 1, table, n);
      r += bracket_basis(j, i + 1, table, n);
      if (!visit(std::array{symbol_a, i, j}, std::move(r))) return;
    }

  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      for (int k = j + 1; k <= n; ++k) {
        BasicElement<S> r = bracket(basis(i), pb(j, k), table);
        r -= bracket(basis(j), pb(i, k), table);
        r += bracket(basis(k), pb(i, j), table);
        if (!visit(std::array{i, j, k}, std::move(r))) return;
      }
}

}  // namespace

ResidualReport jacobi_check(const ParamTable& table, int n) {
  ResidualReport report;
  report.trunc = n;
  sweep_triples<Rational>(table, n, [&](std::array<int, 3> key, Element r) {
    if (!r.is_zero()) report.violations.emplace(key, std::move(r));
    return true;
  });
  return report;
}

bool jacobi_holds(const ParamTable& table, int n) {
  bool ok = true;
  sweep_triples<Rational>(table, n, [&](std::array<int, 3>, Element r) {
    ok = r.is_zero();
    return ok;
  });
  return ok;
}

ResidualReport restrict_to(const ResidualReport& report, int m) {
  if (m > report.trunc) throw std::domain_error("ResidualReport: cannot restrict upward");
  ResidualReport out;
  out.trunc = m;
  for (const auto& [key, residual] : report.violations) {
    if (key[1] > m || key[2] > m || (key[0] != symbol_a && key[0] > m)) continue;
    Element r = restrict_to(residual, m);
    if (!r.is_zero()) out.violations.emplace(key, std::move(r));
  }
  return out;
}

SymTable symbolic_table(int n) {
  SymTable t;
  for (int j = 1; 2 * j + 2 <= n; ++j)
    for (int s = 1; 2 * j + 1 + s <= n; ++s) t.set(j, s, QuadPoly::variable(j, s));
  return t;
}

std::vector<QuadPoly> jacobi_polynomials(int n) {
  std::set<QuadPoly> seen;
  sweep_triples<QuadPoly>(symbolic_table(n), n, [&](std::array<int, 3>, SymElement r) {
    for (auto& [i, poly] : r.coeffs_e) seen.insert(poly);
    return true;
  });
  return {seen.begin(), seen.end()};
}

}  // namespace filiform
