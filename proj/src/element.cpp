#include "filiform/element.hpp"

#include <ostream>

#include "filiform/detail/format.hpp"

namespace filiform {

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (!x.coeff_a.is_zero()) detail::append_term(out, x.coeff_a, "a");
  for (const auto& [i, v] : x.coeffs_e)
    detail::append_term(out, v, "e_" + std::to_string(i));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

}  // namespace filiform
