#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mutwb/laurent/laurent.hpp"

namespace mutwb {

/// Quotient of Laurent polynomials in canonical form: the denominator is a polynomial with no
/// monomial factor, numerator and denominator are coprime, and the graded-lex least term of the
/// denominator has a positive coefficient. Equal values therefore have equal representations.
class RationalExpr {
 public:
  RationalExpr() = default;
  explicit RationalExpr(LaurentExpr num);
  /// Throws DivisionByZeroExpr if den is zero.
  RationalExpr(LaurentExpr num, LaurentExpr den);

  static RationalExpr constant(std::size_t nvars, const Integer& c);
  static RationalExpr monomial(std::size_t nvars, const LatticeVector& exp);

  std::size_t nvars() const noexcept { return num_.nvars(); }
  const LaurentExpr& num() const noexcept { return num_; }
  const LaurentExpr& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  /// Monomial count of numerator plus denominator; the size measure for expression caps.
  std::size_t size() const noexcept { return num_.size() + den_.size(); }

  RationalExpr operator-() const;
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  bool operator==(const RationalExpr& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Throws PoleAtPoint if the denominator vanishes at the point.
  Rational evaluate(const std::vector<Rational>& point) const;
  std::uint64_t evaluate_mod(const std::vector<std::uint64_t>& point) const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string render() const;
  std::size_t hash() const;

 private:
  struct Canonical {};
  RationalExpr(LaurentExpr num, LaurentExpr den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalExpr make(LaurentExpr num, LaurentExpr den, bool coprime);
  friend RationalExpr pow(const RationalExpr& base, const Integer& e);

  LaurentExpr num_;
  LaurentExpr den_;
};

RationalExpr pow(const RationalExpr& base, const Integer& e);

/// a/b = c/d iff a*d = c*b; the normative equality, independent of canonical form.
bool equal_by_cross_multiplication(const RationalExpr& x, const RationalExpr& y);

RationalExpr parse_rational_expr(std::string_view text, std::size_t nvars);

}  // namespace mutwb
