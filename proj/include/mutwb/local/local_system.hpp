#pragma once

#include <cstddef>

#include "mutwb/matrix.hpp"
#include "mutwb/numeric.hpp"
#include "mutwb/torus/curves.hpp"

namespace mutwb {

/// Rank-1 local system on T^2: holonomies on a = (1,0) and b = (0,1).
class Character {
 public:
  Character() = default;
  /// Throws InvalidArgument if a holonomy is zero.
  Character(Rational a, Rational b);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  /// x(p,q) = x_a^p x_b^q.
  Rational value(const LatticeVector& cls) const;

  bool operator==(const Character&) const = default;

 private:
  Rational a_{1};
  Rational b_{1};
};

/// Crossing count of a path in class g with C_k, in the sign convention of the mutation formula.
Integer crossing_sign(const LatticeVector& vk, const LatticeVector& g);

/// x'(g) = x(g) (1 - x(v_k))^{det(v_k, g)}. Throws NotRegular if x(v_k) = 1.
Character mutate_character(const Character& ch, const GeodesicConfig& cfg, std::size_t k);

/// Rank-n local system on T^2: commuting invertible holonomies A (on a) and B (on b).
class CommutingPair {
 public:
  CommutingPair() = default;
  /// Throws InvalidArgument unless A, B are square of equal size, invertible and commute.
  CommutingPair(RationalMatrix a, RationalMatrix b);

  std::size_t rank() const noexcept { return a_.rows(); }
  const RationalMatrix& a() const noexcept { return a_; }
  const RationalMatrix& b() const noexcept { return b_; }

  bool operator==(const CommutingPair&) const = default;

 private:
  RationalMatrix a_;
  RationalMatrix b_;
};

/// A^p B^q for the class (p, q).
RationalMatrix holonomy(const CommutingPair& sys, const LatticeVector& cls);

/// Holonomy along v_k is kept; along a partner u with det(u, v_k) = 1 it becomes
/// Hol(u) (Id - Hol(v_k))^{det(v_k, u)}. Throws NotRegular if Id - Hol(v_k) is singular.
CommutingPair mutate_rank_n(const CommutingPair& sys, const GeodesicConfig& cfg, std::size_t k);

}  // namespace mutwb
