#include "filiform/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace filiform {

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  VectorField r;
  for (const auto& [i, ci] : x.coeffs)
    for (const auto& [j, cj] : y.coeffs)
      if (i != j) r.add(i + j, ci * cj * Rational(j - i));
  return r;
}

ParamTable m0(int) { return {}; }

std::vector<VectorField> witt_basis_fields(int base, int n) {
  if (base < 2) throw std::domain_error("witt_basis_fields: need base >= 2");
  std::vector<VectorField> imgs;
  imgs.reserve(static_cast<std::size_t>(n) + 1);
  imgs.push_back(VectorField::f(1));
  imgs.push_back(VectorField::f(base));
  for (int i = 2; i <= n; ++i) imgs.push_back(vf_bracket(imgs[0], imgs.back()));
  return imgs;
}

namespace {

// Reads the defining brackets [e_j, e_{j+1}] in the vector-field arena and
// converts back through e_m = c_m f_{base+m-1}.
ParamTable witt_table(int base, int n) {
  const std::vector<VectorField> e = witt_basis_fields(base, n);
  auto leading = [&](int m) { return e[static_cast<std::size_t>(m)].coeffs.begin()->second; };

  ParamTable table;
  for (int j = 1; j + 1 <= n; ++j) {
    const VectorField b = vf_bracket(e[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(j + 1)]);
    for (const auto& [fidx, coeff] : b.coeffs) {
      const int m = fidx - base + 1;
      if (m < 1 || m > n) continue;
      const int s = m - 2 * j - 1;
      if (s < 1) throw std::logic_error("witt_table: bracket fell below the filiform range");
      table.set(j, s, coeff / leading(m));
    }
  }
  return table;
}

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform-enough in [lo, hi]; exact distribution is irrelevant, only
  // determinism across platforms matters
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

ParamTable witt_positive(int n) { return witt_table(2, n); }

ParamTable witt_subalgebra(int k, int n) {
  if (k < 2) throw std::domain_error("witt_subalgebra: need k >= 2");
  return witt_table(k, n);
}

MetabelianSeq random_metabelian(std::uint64_t seed, const std::vector<int>& support, long bound) {
  if (bound < 1) throw std::domain_error("random_metabelian: need bound >= 1");
  std::vector<int> idx = support;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  SplitMix64 rng{seed};
  MetabelianSeq seq;
  for (int s : idx) {
    long num = rng.range(1, bound);
    if (rng.next() % 2 == 0) num = -num;
    const long den = rng.range(1, bound);
    seq.set(s, Rational(num, den));
  }
  return seq;
}

}  // namespace filiform
