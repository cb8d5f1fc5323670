#include "filiform/classify.hpp"

#include <stdexcept>
#include <vector>

namespace filiform {

MetabelianSeq shift_normalize(const MetabelianSeq& seq, int n) {
  const int h = transform_horizon(n);
  const auto t = seq.first_index(h);
  if (!t) throw std::domain_error("shift_normalize: sequence is zero below the horizon");

  const Rational leading = seq.get(*t);
  MetabelianSeq cur =
      leading.is_one() ? seq.restricted(h)
                       : transform(nu(Rational(1), Rational(0), Rational(1) / leading), seq, n).seq;

  const Rational at2t = cur.get(2 * *t);
  if (!at2t.is_zero()) {
    const Rational c = at2t / Rational(1 + *t);
    cur = transform(nu(Rational(1), c, Rational(1)), cur, n).seq;
  }
  return cur;
}

CanonResult canonicalize(const MetabelianSeq& seq, int n) {
  const int h = transform_horizon(n);
  if (!seq.first_index(h)) return {CanonicalForm::zero(), h};

  const MetabelianSeq normalized = shift_normalize(seq, n);
  const int r = *normalized.first_index(h);

  int s = 0;
  for (const auto& [idx, v] : normalized.entries)
    if (idx > r) {
      s = idx;
      break;
    }
  if (s == 0) return {CanonicalForm::single(r), h};

  // remaining freedom: nu(c_0, 0, c_0^{r+1}) scales entry s by c_0^{r-s},
  // so lambda_s = 1 needs c_0^{s-r} = lambda_s
  const unsigned g = static_cast<unsigned>(s - r);
  const Rational target = normalized.get(s);
  const auto c0 = target.nth_root(g);
  if (!c0) return {RootObstruction{g, target}, h};

  MetabelianSeq scaled = normalized;
  if (!c0->is_one()) scaled = transform(nu(*c0, Rational(0), c0->pow(r + 1)), normalized, n).seq;

  std::map<int, Rational> tail;
  for (const auto& [idx, v] : scaled.entries) {
    if (idx <= s) continue;
    if (idx == 2 * r) throw std::logic_error("canonicalize: entry at 2r survived the shift");
    tail.emplace(idx, v);
  }
  return {CanonicalForm::general(r, s, std::move(tail)), h};
}

namespace {

void ext_gcd(long a, long b, long& g, long& x, long& y) {
  if (b == 0) {
    g = a;
    x = 1;
    y = 0;
    return;
  }
  long x1 = 0, y1 = 0;
  ext_gcd(b, a % b, g, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

// Whether some nonzero complex c solves c^{v_i} = q_i for all i. Pairs of
// constraints merge exactly: c^a = p and c^b = q hold together iff, with
// g = xa + yb = gcd(a, b) and w = p^x q^y, both p = w^{a/g} and q = w^{b/g},
// and then the pair is equivalent to c^g = w. A single surviving constraint
// is always solvable over the complex numbers.
bool power_consistent(const std::vector<long>& exponents, const std::vector<Rational>& values) {
  long cur_exp = exponents[0];
  Rational cur_val = values[0];
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    long g = 0, x = 0, y = 0;
    ext_gcd(cur_exp, exponents[i], g, x, y);
    const Rational w = cur_val.pow(x) * values[i].pow(y);
    if (cur_val != w.pow(cur_exp / g) || values[i] != w.pow(exponents[i] / g)) return false;
    cur_exp = g;
    cur_val = w;
  }
  return true;
}

}  // namespace

bool iso_equivalent(const MetabelianSeq& seq1, const MetabelianSeq& seq2, int n) {
  const int h = transform_horizon(n);
  const bool zero1 = !seq1.first_index(h), zero2 = !seq2.first_index(h);
  if (zero1 || zero2) return zero1 == zero2;

  const MetabelianSeq a = shift_normalize(seq1, n);
  const MetabelianSeq b = shift_normalize(seq2, n);

  const int r = *a.first_index(h);
  if (r != *b.first_index(h)) return false;

  // after shift normalization only pure scalings nu(c_0, 0, c_0^{r+1})
  // remain, acting by lambda_t -> c_0^{r-t} lambda_t: supports must agree
  std::vector<long> gaps;
  for (const auto& [t, v] : a.entries)
    if (t != r) gaps.push_back(t - r);
  {
    std::vector<long> gaps_b;
    for (const auto& [t, v] : b.entries)
      if (t != r) gaps_b.push_back(t - r);
    if (gaps != gaps_b) return false;
  }
  if (gaps.empty()) return true;  // both are Single(r)

  // a complex c_0 with a_t / b_t = c_0^{t-r} for every t exists iff the
  // ratios are consistent through gcds of the exponents
  std::vector<Rational> q;
  for (const auto& [t, v] : a.entries)
    if (t != r) q.push_back(v / b.get(t));
  return power_consistent(gaps, q);
}

MetabelianSeq realize(const CanonicalForm& canon, int n) {
  MetabelianSeq seq;
  switch (canon.kind) {
    case CanonicalForm::Kind::Zero:
      break;
    case CanonicalForm::Kind::Single:
      if (canon.r < 1) throw std::invalid_argument("realize: Single needs r >= 1");
      seq.set(canon.r, Rational(1));
      break;
    case CanonicalForm::Kind::General: {
      if (canon.r < 1 || canon.s <= canon.r || canon.s == 2 * canon.r)
        throw std::invalid_argument("realize: General needs 1 <= r < s, s != 2r");
      for (const auto& [t, v] : canon.tail)
        if (t <= canon.s || t == 2 * canon.r || v.is_zero())
          throw std::invalid_argument("realize: malformed tail");
      seq.set(canon.r, Rational(1));
      seq.set(canon.s, Rational(1));
      for (const auto& [t, v] : canon.tail) seq.set(t, v);
      break;
    }
  }
  return seq;
}

CanonicalForm restrict_form(const CanonicalForm& canon, int h) {
  switch (canon.kind) {
    case CanonicalForm::Kind::Zero:
      return CanonicalForm::zero();
    case CanonicalForm::Kind::Single:
      return canon.r <= h ? canon : CanonicalForm::zero();
    case CanonicalForm::Kind::General: {
      if (canon.r > h) return CanonicalForm::zero();
      if (canon.s > h) return CanonicalForm::single(canon.r);
      std::map<int, Rational> tail;
      for (const auto& [t, v] : canon.tail)
        if (t <= h) tail.emplace(t, v);
      return CanonicalForm::general(canon.r, canon.s, std::move(tail));
    }
  }
  return CanonicalForm::zero();
}

std::string to_string(const CanonicalForm& canon) {
  switch (canon.kind) {
    case CanonicalForm::Kind::Zero:
      return "Zero";
    case CanonicalForm::Kind::Single:
      return "Single r=" + std::to_string(canon.r);
    case CanonicalForm::Kind::General: {
      std::string out = "General r=" + std::to_string(canon.r) + " s=" + std::to_string(canon.s) + " tail={";
      bool first = true;
      for (const auto& [t, v] : canon.tail) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(t) + ":" + v.str();
      }
      return out + "}";
    }
  }
  return {};
}

std::string to_string(const RootObstruction& obstruction) {
  return "RootObstruction degree=" + std::to_string(obstruction.degree) +
         " radicand=" + obstruction.radicand.str();
}

}  // namespace filiform
