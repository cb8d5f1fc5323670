#pragma once

#include <string>

#include "filiform/rational.hpp"

namespace filiform::detail {

// Appends "coeff symbol" to a signed sum: " + 2/3 e_4", "- e_6", "a + 5", ...
// Unit coefficients drop the number unless the symbol itself is empty.
inline void append_term(std::string& out, const Rational& coeff, const std::string& symbol) {
  const bool neg = coeff.sign() < 0;
  if (out.empty())
    out += neg ? "- " : "";
  else
    out += neg ? " - " : " + ";
  const Rational mag = neg ? -coeff : coeff;
  if (!mag.is_one() || symbol.empty()) {
    out += mag.str();
    if (!symbol.empty()) out += ' ';
  }
  out += symbol;
}

}  // namespace filiform::detail
