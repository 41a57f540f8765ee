#pragma once

#include <cstddef>
#include <vector>

#include "mutwb/numeric.hpp"

namespace mutwb {

/// Z^m with an integral skew-symmetric form.
class SkewLattice {
 public:
  SkewLattice() = default;
  explicit SkewLattice(IntMatrix form);

  /// The standard rank-2 form [[0,1],[-1,0]]; pairing is det(u, v).
  static SkewLattice standard_plane();

  std::size_t rank() const noexcept { return form_.size(); }
  const IntMatrix& form() const noexcept { return form_; }

  Integer pair(const LatticeVector& u, const LatticeVector& v) const;
  /// Row vector u^T * form, i.e. the functional {u, -} in dual coordinates.
  LatticeVector functional(const LatticeVector& u) const;

  bool operator==(const SkewLattice&) const = default;

 private:
  IntMatrix form_;
};

enum class Duplicates { Reject, Flag };

/// A skew lattice with an indexed tuple of primitive vectors and a Z/2 signing.
/// Mutation is index-preserving; coinciding vectors set degenerate_vectors().
class Seed {
 public:
  Seed() = default;
  /// Validates primitivity and signing values, and distinctness unless duplicates are flagged.
  /// Throws InvalidArgument.
  Seed(SkewLattice lattice, std::vector<LatticeVector> vectors, std::vector<int> signing,
       Duplicates duplicates = Duplicates::Reject);
  Seed(SkewLattice lattice, std::vector<LatticeVector> vectors);

  const SkewLattice& lattice() const noexcept { return lattice_; }
  std::size_t rank() const noexcept { return lattice_.rank(); }
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<LatticeVector>& vectors() const noexcept { return vectors_; }
  const LatticeVector& vector(std::size_t i) const { return vectors_.at(i); }
  const std::vector<int>& signing() const noexcept { return signing_; }
  bool degenerate_vectors() const noexcept { return degenerate_; }

  Seed with_signing(std::vector<int> signing) const;

  bool operator==(const Seed&) const = default;

 private:
  friend Seed mutate_seed(const Seed&, std::size_t);

  SkewLattice lattice_;
  std::vector<LatticeVector> vectors_;
  std::vector<int> signing_;
  bool degenerate_ = false;
};

Integer pairing(const Seed& seed, std::size_t i, std::size_t j);

/// Exchange matrix B[i][j] = {e_i, e_j}.
IntMatrix exchange_matrix(const Seed& seed);

/// e_k -> -e_k, e_i -> e_i + max({e_i, e_k}, 0) e_k.
Seed mutate_seed(const Seed& seed, std::size_t k);

Seed mutate_seed(const Seed& seed, const std::vector<std::size_t>& word);

/// Standard skew-symmetric matrix mutation at k.
IntMatrix mutate_exchange_matrix(const IntMatrix& b, std::size_t k);

/// Seed on Z^n with the standard basis and form b (the quiver-to-seed direction).
Seed seed_from_exchange_matrix(const IntMatrix& b);

}  // namespace mutwb
