#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mutwb/cluster/seed.hpp"
#include "mutwb/laurent/rational.hpp"

namespace mutwb {

/// Birational map of the torus (C*)^m given by pullbacks of the coordinate monomials z^{b_j}.
class RationalMap {
 public:
  RationalMap() = default;
  /// Throws InvalidArgument on a zero image or mismatched variable counts.
  explicit RationalMap(std::vector<RationalExpr> images);

  static RationalMap identity(std::size_t rank);

  std::size_t rank() const noexcept { return images_.size(); }
  const std::vector<RationalExpr>& images() const noexcept { return images_; }
  const RationalExpr& image(std::size_t j) const { return images_.at(j); }
  bool is_identity() const;
  /// Largest image size; compared against expression caps.
  std::size_t max_image_size() const;

  bool operator==(const RationalMap&) const = default;

 private:
  std::vector<RationalExpr> images_;
};

/// f^* z^n = prod_j f^*(z^{b_j})^{n_j}.
RationalExpr pullback_monomial(const RationalMap& f, const LatticeVector& n);

/// f^* applied to an arbitrary expression in the target coordinates.
RationalExpr pullback(const RationalMap& f, const RationalExpr& e);

/// Map whose pullback is g^* after f^*, i.e. (f o g)^* = g^* o f^*.
RationalMap compose_maps(const RationalMap& f, const RationalMap& g);

/// Throws InvalidArgument for a zero coordinate and PoleAtPoint where the map is not regular.
std::vector<Rational> evaluate_map(const RationalMap& f, const std::vector<Rational>& point);

/// mu^* z^n = z^n (1 + eps z^{e_k})^{{e_k, n}}, eps = (-1)^{sigma_k} when signed, else 1.
RationalMap x_mutation_map(const Seed& seed, std::size_t k, bool use_sign);

/// Dual-lattice map mu^* z^m = z^m (1 + eps z^{{e_k,-}})^{-<e_k, m>}.
/// Throws NonMonomialConstant if {e_k,-} vanishes.
RationalMap a_mutation_map(const Seed& seed, std::size_t k, bool use_sign);

}  // namespace mutwb
