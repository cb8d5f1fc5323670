#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "filiform/param_table.hpp"

namespace filiform {

/// Finite combination of the fields f_i = x^{i+1} d/dx, i >= 1, with
/// [f_i, f_j] = (j - i) f_{i+j}. No truncation: this is the independent
/// arena the named tables are derived in.
struct VectorField {
  std::map<int, Rational> coeffs;

  static VectorField f(int i) {
    if (i < 1) throw std::domain_error("VectorField: index must be >= 1");
    VectorField v;
    v.coeffs.emplace(i, Rational(1));
    return v;
  }

  bool is_zero() const { return coeffs.empty(); }

  void add(int i, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }

  VectorField& operator+=(const VectorField& o) {
    for (const auto& [i, c] : o.coeffs) add(i, c);
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }

  VectorField scaled(const Rational& f) const {
    VectorField r;
    if (f.is_zero()) return r;
    for (const auto& [i, c] : coeffs) r.coeffs.emplace(i, c * f);
    return r;
  }

  friend bool operator==(const VectorField& a, const VectorField& b) = default;
};

/// [f_i, f_j] = (j - i) f_{i+j}, extended bilinearly.
VectorField vf_bracket(const VectorField& x, const VectorField& y);

/// The undeformed algebra: every e-bracket vanishes.
ParamTable m0(int n);

/// Filiform images a -> f_1, e_1 -> f_base, e_{i+1} -> [a, e_i] as vector
/// fields, indices 0..n (0 is a). Each e_i lands on a single scaled f.
std::vector<VectorField> witt_basis_fields(int base, int n);

/// Parameter table of the subalgebra span{f_1, f_2, f_3, ...} in the
/// filiform basis a = f_1, e_i = (i-1)! f_{i+1}; the constants are read
/// off the vector-field bracket, never hard-coded.
ParamTable witt_positive(int n);

/// Parameter table of the subalgebra span{f_1, f_k, f_{k+1}, ...}, k >= 2,
/// in the filiform basis a = f_1, e_1 = f_k; support sits in column k-1.
ParamTable witt_subalgebra(int k, int n);

/// Deterministic pseudo-random nonzero entries on the given support, with
/// |numerator| and denominator bounded by `bound` (>= 1).
MetabelianSeq random_metabelian(std::uint64_t seed, const std::vector<int>& support, long bound);

}  // namespace filiform
