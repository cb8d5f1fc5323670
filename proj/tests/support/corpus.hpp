#pragma once

#include <cstdint>
#include <vector>

#include "filiform/param_table.hpp"

namespace filiform::testsupport {

// Deterministic generator for test corpora; splitmix64, identical on every
// platform.
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long bound) {
    long num = range(1, bound);
    if (next() % 2 == 0) num = -num;
    return Rational(num, range(1, bound));
  }

  Rational nonzero_rational(long bound) { return rational(bound); }
};

// A sparse table with `entries` nonzero values at row <= max_j, column
// <= max_s. Positions may collide, so the result has at most `entries`
// entries; never zero values.
inline ParamTable random_table(std::uint64_t seed, int entries, int max_j, int max_s, long bound) {
  Rng rng{seed};
  ParamTable t;
  for (int i = 0; i < entries; ++i) {
    const int j = static_cast<int>(rng.range(1, max_j));
    const int s = static_cast<int>(rng.range(1, max_s));
    t.set(j, s, rng.rational(bound));
  }
  return t;
}

inline std::vector<int> random_support(Rng& rng, int count, int max_index) {
  std::vector<int> support;
  for (int i = 0; i < count; ++i) support.push_back(static_cast<int>(rng.range(1, max_index)));
  return support;
}

}  // namespace filiform::testsupport
