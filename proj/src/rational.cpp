#include "filiform/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace filiform {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
  if (sgn(v_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : v_(std::move(num), std::move(den)) {
  if (sgn(v_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool valid_integer_token(std::string_view t) {
  if (!t.empty() && t.front() == '-') t.remove_prefix(1);
  if (t.empty()) return false;
  for (char ch : t)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("Rational: malformed value '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (sgn(d) == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  return Rational(std::move(n), std::move(d));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: negative power of zero");
    return Rational(0);
  }
  const auto ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
  if (e < 0) std::swap(num, den);
  return Rational(std::move(num), std::move(den));
}

std::optional<Rational> Rational::nth_root(unsigned g) const {
  if (g == 0) throw std::domain_error("Rational: 0th root");
  if (g == 1 || is_zero()) return *this;
  if (sign() < 0 && g % 2 == 0) return std::nullopt;
  mpz_class absnum = abs(v_.get_num());
  mpz_class rnum, rden;
  // mpz_root returns nonzero iff the root is exact
  if (!mpz_root(rnum.get_mpz_t(), absnum.get_mpz_t(), g)) return std::nullopt;
  if (!mpz_root(rden.get_mpz_t(), v_.get_den().get_mpz_t(), g)) return std::nullopt;
  if (sign() < 0) rnum = -rnum;
  return Rational(std::move(rnum), std::move(rden));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(std::move(b), mpz_class(1));
}

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(std::move(f), mpz_class(1));
}

}  // namespace filiform
