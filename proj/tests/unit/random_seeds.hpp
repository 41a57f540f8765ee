#pragma once

#include <algorithm>
#include <random>

#include "mutwb/cluster/seed.hpp"

namespace mutwb::testing {

inline IntMatrix random_skew_form(std::mt19937_64& rng, std::size_t m, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix f(m, std::vector<Integer>(m, Integer(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      f[i][j] = entry(rng);
      f[j][i] = -f[i][j];
    }
  }
  return f;
}

/// Random seed with distinct primitive vectors; entries bounded by vector_bound.
/// Rank 1 has only two primitive vectors, so count is clamped there.
inline Seed random_seed(std::mt19937_64& rng, std::size_t m, std::size_t count, int form_bound, int vector_bound) {
  if (m == 1) count = std::min<std::size_t>(count, 2);
  std::uniform_int_distribution<int> entry(-vector_bound, vector_bound);
  std::bernoulli_distribution coin(0.5);
  SkewLattice lattice(random_skew_form(rng, m, form_bound));
  std::vector<LatticeVector> vectors;
  while (vectors.size() < count) {
    LatticeVector v(m);
    for (auto& x : v) x = entry(rng);
    if (is_zero(v) || !is_primitive(v)) continue;
    bool dup = false;
    for (const auto& w : vectors) dup = dup || w == v;
    if (!dup) vectors.push_back(v);
  }
  std::vector<int> signing(count);
  for (auto& s : signing) s = coin(rng) ? 1 : 0;
  return Seed(lattice, vectors, signing);
}

/// Fraction-free rank of an integer matrix given by rows.
inline std::size_t integer_rank(IntMatrix rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      Integer f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t t = 0; t < cols; ++t) rows[r][t] = rows[r][t] * rows[rank][c] - f * rows[rank][t];
    }
    ++rank;
  }
  return rank;
}

/// Random primitive class in Z^2 with entries in [-bound, bound].
inline LatticeVector random_class(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  while (true) {
    LatticeVector v{Integer(entry(rng)), Integer(entry(rng))};
    if (!is_zero(v) && is_primitive(v)) return v;
  }
}

/// Standard basis seed of rank n with the given exchange matrix.
inline Seed basis_seed(const IntMatrix& b) { return seed_from_exchange_matrix(b); }

}  // namespace mutwb::testing
