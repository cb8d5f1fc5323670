#pragma once

#include <map>
#include <string>
#include <variant>

#include "filiform/automorphism.hpp"

namespace filiform {

/// Normal form of a metabelian sequence under basis changes:
///   Zero                  the undeformed algebra, every lambda_s = 0
///   Single(r)             lambda_r = 1, everything else 0
///   General(r, s, tail)   lambda_r = lambda_s = 1, lambda_t = 0 for
///                         t < s with t != r, lambda_{2r} = 0, free tail
///                         at indices t > s, t != 2r
struct CanonicalForm {
  enum class Kind { Zero, Single, General };
  Kind kind = Kind::Zero;
  int r = 0;
  int s = 0;
  std::map<int, Rational> tail;

  static CanonicalForm zero() { return {}; }
  static CanonicalForm single(int r) { return {Kind::Single, r, 0, {}}; }
  static CanonicalForm general(int r, int s, std::map<int, Rational> tail) {
    return {Kind::General, r, s, std::move(tail)};
  }

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) = default;
};

/// Raised when normalizing over the rationals would need a root of
/// x^degree - radicand that the rationals do not contain. Over the complex
/// numbers the normalization always proceeds; iso_equivalent covers that
/// question without leaving exact arithmetic.
struct RootObstruction {
  unsigned degree = 0;
  Rational radicand;

  friend bool operator==(const RootObstruction& a, const RootObstruction& b) = default;
};

struct CanonResult {
  std::variant<CanonicalForm, RootObstruction> outcome;
  int horizon = 0;  // sequence indices <= horizon are certain at this truncation

  bool obstructed() const { return std::holds_alternative<RootObstruction>(outcome); }
  const CanonicalForm& form() const { return std::get<CanonicalForm>(outcome); }
  const RootObstruction& obstruction() const { return std::get<RootObstruction>(outcome); }
};

/// First normalization stage: scale the first nonzero entry lambda_t to 1,
/// then shift by nu(1, lambda_{2t}/(1+t), 1) so the entry at 2t vanishes.
/// Entries strictly between t and 2t are untouched. Idempotent.
/// Throws std::domain_error when the sequence is zero below the horizon.
MetabelianSeq shift_normalize(const MetabelianSeq& seq, int n);

/// Full normalization pipeline at truncation n.
CanonResult canonicalize(const MetabelianSeq& seq, int n);

/// Whether L_(seq1) and L_(seq2) are isomorphic over the complex numbers,
/// decided in rational arithmetic, comparing data below the horizon.
bool iso_equivalent(const MetabelianSeq& seq1, const MetabelianSeq& seq2, int n);

/// The representative sequence of a canonical form.
/// Throws std::invalid_argument on a malformed form.
MetabelianSeq realize(const CanonicalForm& canon, int n);

/// The form seen through a smaller certainty horizon: tail entries above h
/// drop, and a class whose defining indices exceed h degrades accordingly.
CanonicalForm restrict_form(const CanonicalForm& canon, int h);

std::string to_string(const CanonicalForm& canon);
std::string to_string(const RootObstruction& obstruction);

}  // namespace filiform
