#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filiform/generators.hpp"
#include "filiform/jacobi.hpp"
#include "support/corpus.hpp"

using namespace filiform;

namespace {

Element e(int i, int n) { return Element::basis(i, n); }
Element a(int n) { return Element::basis(symbol_a, n); }

// Test-side builder for the residual of (e_{n-1}, e_n, e_{n+1}) when rows
// above n vanish:  -sum_{s,t >= 1} (n + s) mu_s mu_t e_{3n+s+t}
Element expected_mu_square_residual(int n, const std::map<int, Rational>& mu, int trunc) {
  Element r(trunc);
  for (const auto& [s, ms] : mu)
    for (const auto& [t, mt] : mu) r.add_e(3 * n + s + t, -Rational(n + s) * ms * mt);
  return r;
}

ParamTable theorem2_table(std::uint64_t seed, int n, std::map<int, Rational>* lambda_out,
                          std::map<int, Rational>* mu_out) {
  testsupport::Rng rng{seed};
  ParamTable t;
  // random rows strictly below n-1 must not disturb anything
  for (int j = 1; j < n - 1; ++j)
    for (int reps = 0; reps < 2; ++reps) t.set(j, static_cast<int>(rng.range(1, 5)), rng.rational(7));
  for (int s = 1; s <= 4; ++s) {
    if (rng.next() % 3 != 0) {
      const Rational v = rng.rational(7);
      t.set(n - 1, s, v);
      (*lambda_out)[s] = v;
    }
    if (rng.next() % 3 != 0) {
      const Rational v = rng.rational(7);
      t.set(n, s, v);
      (*mu_out)[s] = v;
    }
  }
  return t;
}

}  // namespace

TEST_CASE("residual vanishes on repeated arguments") {
  const ParamTable t = testsupport::random_table(5, 8, 5, 8, 9);
  const int n = 12;
  CHECK(jacobi_residual(e(2, n), e(2, n), e(5, n), t).is_zero());
  CHECK(jacobi_residual(e(3, n), e(7, n), e(3, n), t).is_zero());
  CHECK(jacobi_residual(a(n), a(n), e(4, n), t).is_zero());
}

TEST_CASE("triples containing a never violate, for any table") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const int n = 25;
    const ParamTable t = testsupport::random_table(seed, 9, 7, 10, 9);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(jacobi_residual(a(n), e(i, n), e(j, n), t).is_zero());
  }
}

TEST_CASE("proof-recursion residual: rows above n zero") {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const int trunc = 40;
      std::map<int, Rational> lambda, mu;
      const ParamTable t = theorem2_table(seed * 100 + static_cast<std::uint64_t>(n), n, &lambda, &mu);
      const Element got = jacobi_residual(e(n - 1, trunc), e(n, trunc), e(n + 1, trunc), t);
      CHECK(got == expected_mu_square_residual(n, mu, trunc));
    }
}

TEST_CASE("a nonzero row n below the truncation window blocks Jacobi") {
  // single entry mu_s in row n: residual -(n+s) mu_s^2 e_{3n+2s} survives
  const int n = 3, s = 2, trunc = 20;
  ParamTable t;
  t.set(n, s, Rational(1, 2));
  t.set(n - 1, 1, Rational(5));
  Element expected(trunc);
  expected.add_e(3 * n + 2 * s, -Rational(n + s) * Rational(1, 4));
  CHECK(jacobi_residual(e(n - 1, trunc), e(n, trunc), e(n + 1, trunc), t) == expected);
  CHECK(!jacobi_check(t, trunc).ok());
  CHECK(!jacobi_holds(t, trunc));
}

TEST_CASE("tables supported on row 1 always satisfy Jacobi") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    testsupport::Rng rng{seed};
    ParamTable t;
    for (int i = 0; i < 6; ++i) t.set(1, static_cast<int>(rng.range(1, 20)), rng.rational(9));
    const auto report = jacobi_check(t, 30);
    CHECK(report.ok());
    CHECK(report.trunc == 30);
    CHECK(jacobi_holds(t, 30));
  }
}

TEST_CASE("lambda_{21} = 1 violates Jacobi at N = 12") {
  ParamTable t;
  t.set(2, 1, Rational(1));
  const auto report = jacobi_check(t, 12);
  CHECK(!report.ok());
  // lowest violation, frozen from the mu-square formula with n = 2, s = t = 1
  const auto it = report.violations.find({1, 2, 3});
  REQUIRE(it != report.violations.end());
  Element expected(12);
  expected.add_e(8, Rational(-3));
  CHECK(it->second == expected);
}

TEST_CASE("witt tables satisfy Jacobi") {
  CHECK(jacobi_check(witt_positive(25), 25).ok());
  CHECK(jacobi_check(witt_subalgebra(3, 20), 20).ok());
}

TEST_CASE("report restriction matches direct recomputation") {
  ParamTable t = testsupport::random_table(17, 6, 4, 6, 7);
  t.set(2, 1, Rational(1));  // guarantee violations
  const auto big = jacobi_check(t, 18);
  CHECK(restrict_to(big, 11).violations == jacobi_check(t, 11).violations);
  CHECK_THROWS_AS(restrict_to(big, 19), std::domain_error);
}

TEST_CASE("jacobi_check needs N >= 3") {
  CHECK_THROWS_AS(jacobi_check(ParamTable{}, 2), std::domain_error);
}

TEST_CASE("symbolic table covers exactly the visible positions") {
  const SymTable t = symbolic_table(12);
  for (const auto& [key, v] : t.entries) {
    CHECK(2 * key.first + 1 + key.second <= 12);
    CHECK(v == QuadPoly::variable(key.first, key.second));
  }
  CHECK(!t.get(1, 9).is_zero());  // 2+1+9 = 12
  CHECK(!t.get(4, 3).is_zero());  // 8+1+3 = 12
  CHECK(t.get(1, 10).is_zero());  // just past the window
  CHECK(t.get(4, 4).is_zero());
  CHECK(t.get(6, 1).is_zero());
}

TEST_CASE("no conditions at N = 3") { CHECK(jacobi_polynomials(3).empty()); }

TEST_CASE("every condition involves a row above 1") {
  const auto polys = jacobi_polynomials(12);
  CHECK(!polys.empty());
  for (const auto& p : polys) {
    CHECK(!p.is_zero());
    for (const auto& [mono, coeff] : p.terms) {
      bool high_row = false;
      for (const auto& [j, s] : mono) high_row = high_row || j > 1;
      CHECK(high_row);  // killing rows j > 1 kills the whole polynomial
    }
  }
}

TEST_CASE("polynomial list is deduplicated and deterministically ordered") {
  const auto polys = jacobi_polynomials(11);
  for (std::size_t i = 1; i < polys.size(); ++i) {
    CHECK(polys[i - 1] < polys[i]);
  }
  CHECK(polys == jacobi_polynomials(11));
}

TEST_CASE("symbolic residuals evaluate to the concrete ones") {
  const int n = 10;
  const SymTable sym = symbolic_table(n);
  for (std::uint64_t seed = 3; seed <= 5; ++seed) {
    const ParamTable t = testsupport::random_table(seed, 7, 4, 7, 9);
    const auto concrete = jacobi_check(t, n);
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 1; ++j)
        for (int k = j + 1; k <= n; ++k) {
          const SymElement sr = jacobi_residual(SymElement::basis(i, n), SymElement::basis(j, n),
                                                SymElement::basis(k, n), sym);
          Element eval(n);
          for (const auto& [idx, poly] : sr.coeffs_e) eval.add_e(idx, poly.eval(t));
          const auto it = concrete.violations.find({i, j, k});
          if (it == concrete.violations.end())
            CHECK(eval.is_zero());
          else
            CHECK(eval == it->second);
        }
  }
}

TEST_CASE("a Lie table zeroes every polynomial, a non-Lie table does not") {
  const int n = 10;
  const auto polys = jacobi_polynomials(n);

  ParamTable lie;  // row 1 only
  lie.set(1, 1, Rational(3, 2));
  lie.set(1, 4, Rational(-2));
  for (const auto& p : polys) CHECK(p.eval(lie) == Rational(0));

  ParamTable bad;
  bad.set(2, 1, Rational(1));
  bool some_nonzero = false;
  for (const auto& p : polys) some_nonzero = some_nonzero || !p.eval(bad).is_zero();
  CHECK(some_nonzero);
  CHECK(!jacobi_holds(bad, n));
}
