#include "filiform/quad_poly.hpp"

#include "filiform/detail/format.hpp"

namespace filiform {

namespace {

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t run = i + 1;
    while (run < m.size() && m[run] == m[i]) ++run;
    if (!out.empty()) out += '*';
    out += "x(" + std::to_string(m[i].first) + "," + std::to_string(m[i].second) + ")";
    if (run - i > 1) out += "^" + std::to_string(run - i);
    i = run;
  }
  return out;
}

}  // namespace

std::string to_string(const QuadPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms) detail::append_term(out, c, monomial_str(m));
  return out;
}

}  // namespace filiform
