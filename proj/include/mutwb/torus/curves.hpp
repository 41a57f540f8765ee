#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mutwb/cluster/seed.hpp"
#include "mutwb/numeric.hpp"

namespace mutwb {

/// Co-oriented closed geodesics on the flat torus, given by primitive classes in Z^2.
/// A curve is oriented along v and co-oriented by v rotated by +90 degrees.
/// Parallel duplicates are allowed; they never meet.
class GeodesicConfig {
 public:
  GeodesicConfig() = default;
  /// Throws InvalidArgument unless every class is a primitive vector of Z^2.
  explicit GeodesicConfig(std::vector<LatticeVector> classes);

  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<LatticeVector>& classes() const noexcept { return classes_; }
  const LatticeVector& cls(std::size_t i) const { return classes_.at(i); }

  bool operator==(const GeodesicConfig&) const = default;

 private:
  std::vector<LatticeVector> classes_;
};

/// Signed crossing bookkeeping: P[i][j] counts crossings of C_i and C_j agreeing with the
/// orientation, P[j][i] the disagreeing ones, s[i] the self-crossings of C_i.
class IntersectionLedger {
 public:
  IntersectionLedger() = default;
  explicit IntersectionLedger(std::size_t n);
  /// Throws InvalidArgument on negative entries, a nonzero diagonal or mismatched sizes.
  IntersectionLedger(IntMatrix positive, std::vector<Integer> self);

  std::size_t size() const noexcept { return p_.size(); }
  const IntMatrix& positive() const noexcept { return p_; }
  const std::vector<Integer>& self() const noexcept { return s_; }
  const Integer& positive(std::size_t i, std::size_t j) const { return p_.at(i).at(j); }
  const Integer& negative(std::size_t i, std::size_t j) const { return p_.at(j).at(i); }
  Integer algebraic(std::size_t i, std::size_t j) const { return positive(i, j) - negative(i, j); }
  const Integer& self(std::size_t i) const { return s_.at(i); }

  bool operator==(const IntersectionLedger&) const = default;

 private:
  IntMatrix p_;
  std::vector<Integer> s_;
};

/// Geodesic crossings all share a sign: P[i][j] = max(det(v_i, v_j), 0), s = 0.
IntersectionLedger ledger_from_geodesics(const GeodesicConfig& cfg);

bool is_mutable(const IntersectionLedger& led, std::size_t k);

/// Crossing counts after twisting every curve along C_k; C_k's own row and column swap.
/// Throws NotSimple if C_k self-intersects.
IntersectionLedger mutate_ledger(const IntersectionLedger& led, std::size_t k);

/// v_k -> -v_k, v_i -> v_i + max(det(v_i, v_k), 0) v_k.
GeodesicConfig mutate_geodesics(const GeodesicConfig& cfg, std::size_t k);

/// Isotopes a ledger for cfg to geodesic position, cancelling all removable crossings.
/// Throws InvalidArgument if the ledger's algebraic counts do not match the classes.
IntersectionLedger straighten(const IntersectionLedger& led, const GeodesicConfig& cfg);

/// Rank-2 seed on H_1(T^2) with the classes as vectors; signing defaults to all 1.
/// Coinciding classes are flagged on the seed rather than rejected.
Seed seed_of_config(const GeodesicConfig& cfg, std::optional<std::vector<int>> signing = std::nullopt);

}  // namespace mutwb
