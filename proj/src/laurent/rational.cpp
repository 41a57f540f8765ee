#include "mutwb/laurent/rational.hpp"

#include "mutwb/error.hpp"

namespace mutwb {

namespace {

Exponent negated(const Exponent& a, std::size_t n) {
  Exponent r{};
  for (std::size_t i = 0; i < n; ++i) r[i] = -a[i];
  return r;
}

LaurentExpr exact(const LaurentExpr& a, const LaurentExpr& b) {
  auto q = divide_exact(a, b);
  if (!q) fail(ErrorKind::InvalidArgument, "internal: gcd does not divide");
  return std::move(*q);
}

// Splits a nonzero Laurent polynomial into z^shift * poly with poly free of monomial factors.
std::pair<LaurentExpr, Exponent> split_monomial(const LaurentExpr& p) {
  Exponent m = p.min_exponents();
  return {p.shifted(negated(m, p.nvars())), m};
}

}  // namespace

RationalExpr::RationalExpr(LaurentExpr num) : num_(std::move(num)), den_(LaurentExpr::constant(num_.nvars(), 1)) {}

RationalExpr::RationalExpr(LaurentExpr num, LaurentExpr den) {
  *this = make(std::move(num), std::move(den), false);
}

RationalExpr RationalExpr::make(LaurentExpr num, LaurentExpr den, bool coprime) {
  if (num.nvars() != den.nvars()) fail(ErrorKind::InvalidArgument, "numerator and denominator variable counts differ");
  const std::size_t n = num.nvars();
  if (den.is_zero()) fail(ErrorKind::DivisionByZeroExpr, "zero denominator");
  if (num.is_zero()) return RationalExpr(LaurentExpr(n), LaurentExpr::constant(n, 1), Canonical{});
  auto [np, ns] = split_monomial(num);
  auto [dp, ds] = split_monomial(den);
  if (!coprime) {
    LaurentExpr g = laurent_gcd(np, dp);
    if (!g.is_one()) {
      np = exact(np, g);
      dp = exact(dp, g);
    }
  }
  if (dp.trailing().coef < 0) {
    np = -np;
    dp = -dp;
  }
  Exponent shift{};
  for (std::size_t i = 0; i < n; ++i) shift[i] = ns[i] - ds[i];
  return RationalExpr(np.shifted(shift), std::move(dp), Canonical{});
}

RationalExpr RationalExpr::constant(std::size_t nvars, const Integer& c) {
  return RationalExpr(LaurentExpr::constant(nvars, c));
}

RationalExpr RationalExpr::monomial(std::size_t nvars, const LatticeVector& exp) {
  return RationalExpr(LaurentExpr::monomial(nvars, exp));
}

RationalExpr RationalExpr::operator-() const { return RationalExpr(-num_, den_, Canonical{}); }

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RationalExpr(a.num_ + b.num_);
  if (a.den_ == b.den_) return RationalExpr::make(a.num_ + b.num_, a.den_, false);
  LaurentExpr g = laurent_gcd(a.den_, b.den_);
  if (g.is_one()) {
    // coprime denominators leave nothing to cancel
    return RationalExpr::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, true);
  }
  LaurentExpr ad = exact(a.den_, g);
  LaurentExpr bd = exact(b.den_, g);
  return RationalExpr::make(a.num_ * bd + b.num_ * ad, a.den_ * bd, false);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero() || b.is_zero()) return RationalExpr::constant(n, 0);
  if (a.den_.is_one() && b.den_.is_one()) return RationalExpr(a.num_ * b.num_);
  auto [ap, as] = split_monomial(a.num_);
  auto [bp, bs] = split_monomial(b.num_);
  LaurentExpr g1 = laurent_gcd(ap, b.den_);
  LaurentExpr g2 = laurent_gcd(bp, a.den_);
  LaurentExpr num = exact(ap, g1) * exact(bp, g2);
  LaurentExpr den = exact(a.den_, g2) * exact(b.den_, g1);
  Exponent shift{};
  for (std::size_t i = 0; i < n; ++i) shift[i] = as[i] + bs[i];
  return RationalExpr::make(num.shifted(shift), std::move(den), true);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZeroExpr, "division by the zero expression");
  return a * pow(b, Integer(-1));
}

RationalExpr pow(const RationalExpr& base, const Integer& e) {
  if (e == 0) return RationalExpr::constant(base.nvars(), 1);
  if (base.is_zero()) {
    if (e < 0) fail(ErrorKind::DivisionByZeroExpr, "zero expression raised to a negative power");
    return base;
  }
  Integer a = abs(e);
  if (!mpz_fits_ulong_p(a.get_mpz_t())) fail(ErrorKind::Overflow, "exponent too large");
  const unsigned long k = a.get_ui();
  LaurentExpr num = pow(base.num_, k);
  LaurentExpr den = pow(base.den_, k);
  if (e > 0) return RationalExpr(std::move(num), std::move(den), RationalExpr::Canonical{});
  return RationalExpr::make(std::move(den), std::move(num), true);
}

Rational RationalExpr::evaluate(const std::vector<Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) fail(ErrorKind::PoleAtPoint, "denominator " + den_.render() + " vanishes at the point");
  return num_.evaluate(point) / d;
}

std::uint64_t RationalExpr::evaluate_mod(const std::vector<std::uint64_t>& point) const {
  std::uint64_t d = den_.evaluate_mod(point);
  if (d == 0) fail(ErrorKind::PoleAtPoint, "denominator vanishes modulo p");
  return modp::mul(num_.evaluate_mod(point), modp::inverse(d));
}

std::string RationalExpr::render() const {
  if (den_.is_one()) return num_.render();
  return "(" + num_.render() + ")/(" + den_.render() + ")";
}

std::size_t RationalExpr::hash() const { return num_.hash() * 31 + den_.hash(); }

bool equal_by_cross_multiplication(const RationalExpr& x, const RationalExpr& y) {
  return x.num() * y.den() == y.num() * x.den();
}

RationalExpr parse_rational_expr(std::string_view text, std::size_t nvars) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '(') {
    auto split = text.find(")/(");
    if (split == std::string_view::npos || text.back() != ')') {
      fail(ErrorKind::Parse, "expected (num)/(den) in '" + std::string(text) + "'");
    }
    LaurentExpr num = parse_laurent(text.substr(1, split - 1), nvars);
    LaurentExpr den = parse_laurent(text.substr(split + 3, text.size() - split - 4), nvars);
    if (den.is_zero()) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return RationalExpr(std::move(num), std::move(den));
  }
  return RationalExpr(parse_laurent(text, nvars));
}

}  // namespace mutwb
