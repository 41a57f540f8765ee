#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mutwb/cluster/seed.hpp"
#include "mutwb/numeric.hpp"

namespace mutwb {

/// Arrow multiplicities a[i][j] for i != j (a[i][i] is always 0) plus separate self-loop counts,
/// so that composite loops created by generalized mutation are never merged into the matrix.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::size_t vertex_count);
  Quiver(IntMatrix arrows, std::vector<Integer> loops);

  std::size_t vertex_count() const noexcept { return arrows_.size(); }
  const IntMatrix& arrows() const noexcept { return arrows_; }
  const std::vector<Integer>& loops() const noexcept { return loops_; }
  const Integer& arrows(std::size_t i, std::size_t j) const { return arrows_.at(i).at(j); }
  const Integer& loops(std::size_t i) const { return loops_.at(i); }

  void add_arrows(std::size_t from, std::size_t to, const Integer& count);

  bool has_two_cycle() const;
  bool has_loops() const;

  bool operator==(const Quiver&) const = default;

 private:
  IntMatrix arrows_;
  std::vector<Integer> loops_;
};

/// a[i][j] = max({e_i, e_j}, 0); 2-acyclic by construction.
Quiver quiver_of_seed(const Seed& seed);

/// Generalized mutation: keeps arrows away from k, reverses arrows at k, adds a[i][k]*a[k][j]
/// composites i->j (composites i->i become loops). No 2-cycle cancellation. Throws LoopAtVertex.
Quiver mutate_quiver(const Quiver& q, std::size_t k);

/// Erases loops and cancels 2-cycles.
Quiver reduce_quiver(const Quiver& q);

/// One DOT edge per arrow class with a label carrying the multiplicity; loops included.
std::string to_dot(const Quiver& q, const std::string& name = "Q");

}  // namespace mutwb
