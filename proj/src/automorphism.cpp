#include "filiform/automorphism.hpp"

#include <stdexcept>

namespace filiform {

ParamTable lift(const MetabelianSeq& seq) {
  ParamTable t;
  for (const auto& [s, v] : seq.entries) t.set(1, s, v);
  return t;
}

Rational AutoSpec::c0() const {
  auto it = c.find(0);
  return it == c.end() ? Rational(0) : it->second;
}

Rational AutoSpec::d1() const {
  auto it = d.find(1);
  return it == d.end() ? Rational(0) : it->second;
}

void AutoSpec::validate() const {
  for (const auto& [i, v] : c)
    if (i < 0) throw std::invalid_argument("AutoSpec: negative index in c");
  for (const auto& [i, v] : d)
    if (i < 1) throw std::invalid_argument("AutoSpec: phi(e_1) may only use e_1, e_2, ...");
  if (c0().is_zero() || d1().is_zero())
    throw std::invalid_argument("AutoSpec: not invertible, need c_0 d_1 != 0");
}

AutoSpec nu(const Rational& c0, const Rational& c1, const Rational& d1) {
  AutoSpec spec;
  spec.c[0] = c0;
  if (!c1.is_zero()) spec.c[1] = c1;
  spec.d[1] = d1;
  spec.validate();
  return spec;
}

AutoSpec sigma(const Rational& d, int k) {
  if (k < 2) throw std::invalid_argument("sigma: need k >= 2");
  AutoSpec spec;
  spec.c[0] = Rational(1);
  spec.d[1] = Rational(1);
  if (!d.is_zero()) spec.d[k] = d;
  return spec;
}

AutoSpec tau(const Rational& c, int k) {
  if (k < 2) throw std::invalid_argument("tau: need k >= 2");
  AutoSpec spec;
  spec.c[0] = Rational(1);
  if (!c.is_zero()) spec.c[k] = c;
  spec.d[1] = Rational(1);
  return spec;
}

std::vector<Element> phi_images(const AutoSpec& spec, const MetabelianSeq& seq, int n) {
  spec.validate();
  const ParamTable table = lift(seq);

  std::vector<Element> imgs;
  imgs.reserve(static_cast<std::size_t>(n) + 1);

  Element phi_a(n);
  for (const auto& [i, v] : spec.c) {
    if (i == 0)
      phi_a.add_a(v);
    else
      phi_a.add_e(i, v);
  }
  imgs.push_back(phi_a);

  Element phi_e1(n);
  for (const auto& [i, v] : spec.d) phi_e1.add_e(i, v);
  imgs.push_back(phi_e1);

  for (int i = 2; i <= n; ++i) imgs.push_back(bracket(phi_a, imgs.back(), table));
  return imgs;
}

TransformResult transform(const AutoSpec& spec, const MetabelianSeq& seq, int n) {
  const std::vector<Element> imgs = phi_images(spec, seq, n);
  const ParamTable table = lift(seq);
  const Rational c0 = spec.c0(), d1 = spec.d1();

  // leading coefficient of phi(e_i) on e_i
  auto lead = [&](int i) { return c0.pow(i - 1) * d1; };

  MetabelianSeq out;
  Element rem = bracket(imgs[1], imgs[2], table);
  for (int t = 4; t <= n; ++t) {
    const Rational coeff = rem.coeff_e(t);
    if (coeff.is_zero()) continue;
    const Rational lj = coeff / lead(t);
    out.set(t - 3, lj);
    rem -= imgs[static_cast<std::size_t>(t)].scaled(lj);
  }
  if (!rem.is_zero()) throw std::logic_error("transform: inconsistent expansion of [phi(e_1), phi(e_2)]");

  // the remaining rows must carry the same vector:
  // [phi(e_1), phi(e_i)] = sum_j lambda'_j phi(e_{1+i+j})
  for (int i = 3; i + 2 <= n; ++i) {
    Element row = bracket(imgs[1], imgs[static_cast<std::size_t>(i)], table);
    for (const auto& [j, lj] : out.entries) {
      if (1 + i + j > n) break;
      row -= imgs[static_cast<std::size_t>(1 + i + j)].scaled(lj);
    }
    if (!row.is_zero()) throw std::logic_error("transform: inconsistent expansion of [phi(e_1), phi(e_i)]");
  }

  return {std::move(out), transform_horizon(n)};
}

AutoSpec compose(const AutoSpec& first, const AutoSpec& then, const MetabelianSeq& seq, int n) {
  then.validate();
  const std::vector<Element> imgs = phi_images(first, seq, n);

  Element new_a(n), new_e1(n);
  for (const auto& [i, v] : then.c) {
    if (i == 0)
      new_a += imgs[0].scaled(v);
    else if (i <= n)
      new_a += imgs[static_cast<std::size_t>(i)].scaled(v);
  }
  for (const auto& [i, v] : then.d)
    if (i <= n) new_e1 += imgs[static_cast<std::size_t>(i)].scaled(v);

  AutoSpec out;
  if (!new_a.coeff_a.is_zero()) out.c[0] = new_a.coeff_a;
  for (const auto& [i, v] : new_a.coeffs_e) out.c[i] = v;
  if (!new_e1.coeff_a.is_zero())
    throw std::logic_error("compose: phi(e_1) acquired an a-component");
  for (const auto& [i, v] : new_e1.coeffs_e) out.d[i] = v;
  out.validate();
  return out;
}

}  // namespace filiform
