#pragma once

#include <cstdint>
#include <ostream>

#include "mutwb/error.hpp"

namespace mutwb {

/// Element of the prime field F_P for small P; used by brute-force oracles.
template <std::uint32_t P>
class PrimeField {
 public:
  static constexpr std::uint32_t modulus = P;

  PrimeField() = default;
  PrimeField(long v) : v_(static_cast<std::uint32_t>(((v % static_cast<long>(P)) + P) % P)) {}

  std::uint32_t value() const noexcept { return v_; }

  PrimeField& operator+=(PrimeField o) {
    v_ = (v_ + o.v_) % P;
    return *this;
  }
  PrimeField& operator-=(PrimeField o) {
    v_ = (v_ + P - o.v_) % P;
    return *this;
  }
  PrimeField& operator*=(PrimeField o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % P);
    return *this;
  }
  PrimeField& operator/=(PrimeField o) { return *this *= o.inverse(); }
  friend PrimeField operator+(PrimeField a, PrimeField b) { return a += b; }
  friend PrimeField operator-(PrimeField a, PrimeField b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, PrimeField b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, PrimeField b) { return a /= b; }
  PrimeField operator-() const { return PrimeField(0) - *this; }
  bool operator==(const PrimeField&) const = default;

  PrimeField inverse() const {
    if (v_ == 0) fail(ErrorKind::DivisionByZeroExpr, "inverse of zero in a prime field");
    std::uint64_t r = 1, b = v_, e = P - 2;
    while (e) {
      if (e & 1) r = r * b % P;
      b = b * b % P;
      e >>= 1;
    }
    return PrimeField(static_cast<long>(r));
  }

  friend std::ostream& operator<<(std::ostream& os, PrimeField a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
};

}  // namespace mutwb
