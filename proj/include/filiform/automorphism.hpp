#pragma once

#include <map>
#include <vector>

#include "filiform/bracket.hpp"

namespace filiform {

/// The full parameter table of L_(lambda): row 1 = seq, all other rows zero.
ParamTable lift(const MetabelianSeq& seq);

/// A filtered basis change of L_(lambda), determined by the images
///
///   phi(a)   = c_0 a + c_1 e_1 + c_2 e_2 + ...
///   phi(e_1) =       d_1 e_1 + d_2 e_2 + ...
///
/// with phi(e_{i+1}) = [phi(a), phi(e_i)] inductively. Invertible iff
/// c_0 d_1 != 0; a nonzero coefficient of a in phi(e_1) is never allowed
/// (it would break the filtration).
struct AutoSpec {
  std::map<int, Rational> c;  // index 0 scales a, index i >= 1 adds e_i
  std::map<int, Rational> d;  // index i >= 1 adds e_i

  Rational c0() const;
  Rational d1() const;

  /// Throws std::invalid_argument unless c_0 d_1 != 0 and d has no index-0
  /// or negative entries.
  void validate() const;
};

/// Scaling-plus-shift generator: phi(a) = c0 a + c1 e_1, phi(e_1) = d1 e_1.
AutoSpec nu(const Rational& c0, const Rational& c1, const Rational& d1);
/// phi(a) = a, phi(e_1) = e_1 + d e_k, k >= 2.
AutoSpec sigma(const Rational& d, int k);
/// phi(a) = a + c e_k, phi(e_1) = e_1, k >= 2.
AutoSpec tau(const Rational& c, int k);

/// Images [phi(a), phi(e_1), ..., phi(e_N)] at truncation n, computed in
/// L_(lift(seq)). The coefficient of e_i in phi(e_i) is c_0^{i-1} d_1.
std::vector<Element> phi_images(const AutoSpec& spec, const MetabelianSeq& seq, int n);

/// Largest sequence index the engine can certify from a truncation-N run.
inline int transform_horizon(int n) { return n - 3; }

struct TransformResult {
  MetabelianSeq seq;  // entries only at indices <= horizon
  int horizon = 0;
};

/// Structure vector of L_(seq) in the basis {phi(a), phi(e_i)}: solves
/// [phi(e_1), phi(e_2)] = sum_j lambda'_j phi(e_{3+j}) by back-substitution
/// on leading coefficients, then checks the remaining rows
/// [phi(e_1), phi(e_i)], i > 2, against the same vector. A nonzero
/// remainder anywhere is a std::logic_error.
TransformResult transform(const AutoSpec& spec, const MetabelianSeq& seq, int n);

/// The single basis change equivalent to applying `first` to L_(seq) and
/// then `then` in the transformed basis: its images are the `then`-linear
/// combinations of the phi-images of `first`.
AutoSpec compose(const AutoSpec& first, const AutoSpec& then, const MetabelianSeq& seq, int n);

}  // namespace filiform
