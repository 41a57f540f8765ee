#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mutwb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer vector in an ambient lattice Z^m.
using LatticeVector = std::vector<Integer>;
using IntMatrix = std::vector<std::vector<Integer>>;

Integer parse_integer(std::string_view text);

/// Parses "p", "p/q" or "-p/q"; the result is canonical. Throws Parse on a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Narrowing with an Overflow error instead of silent truncation.
std::int64_t to_int64(const Integer& v);

Integer gcd_of(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);
bool is_zero(const LatticeVector& v);

/// Rational power with a possibly negative exponent. Throws DivisionByZeroExpr for 0^(-n).
Rational pow(const Rational& base, const Integer& exponent);

Integer det2(const LatticeVector& u, const LatticeVector& v);

/// Solves x*q - y*p = 1 for primitive (p, q), returning (x, y).
LatticeVector unimodular_partner(const LatticeVector& v);

}  // namespace mutwb
