#include "mutwb/numeric.hpp"

#include <limits>

#include "mutwb/error.hpp"

namespace mutwb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!valid_integer_text(text)) fail(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

std::int64_t to_int64(const Integer& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) fail(ErrorKind::Overflow, "integer " + v.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(v.get_si());
}

Integer gcd_of(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_primitive(const LatticeVector& v) { return gcd_of(v) == 1; }

bool is_zero(const LatticeVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Rational pow(const Rational& base, const Integer& exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) fail(ErrorKind::DivisionByZeroExpr, "zero raised to a negative power");
    return Rational(0);
  }
  Integer e = abs(exponent);
  if (!mpz_fits_ulong_p(e.get_mpz_t())) fail(ErrorKind::Overflow, "exponent too large");
  unsigned long n = e.get_ui();
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
  r.canonicalize();
  if (exponent < 0) r = 1 / r;
  return r;
}

Integer det2(const LatticeVector& u, const LatticeVector& v) {
  if (u.size() != 2 || v.size() != 2) fail(ErrorKind::InvalidArgument, "det2 needs vectors in Z^2");
  return u[0] * v[1] - u[1] * v[0];
}

LatticeVector unimodular_partner(const LatticeVector& v) {
  if (v.size() != 2 || !is_primitive(v)) fail(ErrorKind::InvalidArgument, "unimodular_partner needs a primitive vector in Z^2");
  // x*q - y*p = 1  <=>  q*x + p*(-y) = 1
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v[1].get_mpz_t(), v[0].get_mpz_t());
  if (g < 0) {
    g = -g;
    s = -s;
    t = -t;
  }
  return {s, -t};
}

}  // namespace mutwb
