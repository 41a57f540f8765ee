#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mutwb/numeric.hpp"

namespace mutwb {

inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector; slots at or beyond the ambient rank are always zero.
using Exponent = std::array<std::int64_t, kMaxVars>;

struct Term {
  Exponent exp{};
  Integer coef;
};

/// Graded-lexicographic comparison of exponents on the first n slots: -1, 0 or 1.
int grlex_compare(const Exponent& a, const Exponent& b, std::size_t n);

/// Laurent polynomial in n variables with integer coefficients.
/// Terms are kept sorted in strictly decreasing graded-lex order with no zero coefficients,
/// so structural equality is value equality.
class LaurentExpr {
 public:
  LaurentExpr() = default;
  explicit LaurentExpr(std::size_t nvars);
  LaurentExpr(std::size_t nvars, std::vector<Term> terms);

  static LaurentExpr constant(std::size_t nvars, const Integer& c);
  static LaurentExpr monomial(std::size_t nvars, const Exponent& exp, const Integer& c = 1);
  static LaurentExpr monomial(std::size_t nvars, const LatticeVector& exp, const Integer& c = 1);
  /// (1 + eps * z^w)^d for d >= 0, expanded binomially.
  static LaurentExpr binomial_power(std::size_t nvars, const Exponent& w, int eps, unsigned long d);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_polynomial() const;
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  Exponent min_exponents() const;
  Exponent max_exponents() const;
  LaurentExpr shifted(const Exponent& by) const;
  LaurentExpr scaled(const Integer& c) const;
  /// Nonnegative gcd of the coefficients.
  Integer content() const;
  LaurentExpr divided_by_integer(const Integer& c) const;

  LaurentExpr operator-() const;
  LaurentExpr& operator+=(const LaurentExpr& o);
  LaurentExpr& operator-=(const LaurentExpr& o);
  LaurentExpr& operator*=(const LaurentExpr& o);
  friend LaurentExpr operator+(LaurentExpr a, const LaurentExpr& b) { return a += b; }
  friend LaurentExpr operator-(LaurentExpr a, const LaurentExpr& b) { return a -= b; }
  friend LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b);
  bool operator==(const LaurentExpr& o) const;

  /// Exact evaluation; a zero coordinate raised to a negative power throws DivisionByZeroExpr.
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Evaluation modulo the prime 2^61 - 1 at nonzero residues.
  std::uint64_t evaluate_mod(const std::vector<std::uint64_t>& point) const;

  /// Terms in increasing graded-lex order, e.g. "1*z[(0,0)] - 2*z[(1,-1)]"; zero renders as "0".
  std::string render() const;
  std::size_t hash() const;

 private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

LaurentExpr pow(const LaurentExpr& base, unsigned long n);

/// While alive, products on this thread throw BudgetExceeded once a result exceeds max_terms terms
/// or the term-by-term multiplications performed add up to more than max_work.
/// Nested budgets keep the tighter limits.
class TermBudget {
 public:
  TermBudget(std::size_t max_terms, std::size_t max_work);
  ~TermBudget();
  TermBudget(const TermBudget&) = delete;
  TermBudget& operator=(const TermBudget&) = delete;

 private:
  std::size_t saved_terms_;
  std::size_t saved_work_;
  std::size_t start_work_;
};

/// Quotient q with a = b * q in the Laurent ring, or nothing if b does not divide a.
std::optional<LaurentExpr> divide_exact(const LaurentExpr& a, const LaurentExpr& b);

/// Greatest common divisor up to Laurent units: a polynomial with no monomial factor
/// and a positive leading coefficient. gcd(0, 0) = 0.
LaurentExpr laurent_gcd(const LaurentExpr& a, const LaurentExpr& b);

/// Inverse of render(); throws Parse.
LaurentExpr parse_laurent(std::string_view text, std::size_t nvars);

namespace modp {
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t power(std::uint64_t a, std::uint64_t e);
std::uint64_t inverse(std::uint64_t a);
std::uint64_t from_integer(const Integer& v);
/// Signed exponent; throws DivisionByZeroExpr for 0^(-n).
std::uint64_t power_signed(std::uint64_t a, std::int64_t e);
/// Arbitrary exponent, reduced modulo p-1 for units.
std::uint64_t power_integer(std::uint64_t a, const Integer& e);
}  // namespace modp

}  // namespace mutwb
